#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "sextic/census.hpp"
#include "sextic/families.hpp"
#include "sextic/fibration.hpp"
#include "sextic/s6.hpp"
#include "sextic/serialize.hpp"

namespace sextic::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--" + flag + ": expected an integer or n/d, got '" + text + "'");
  }
}

BigInt parse_integer(const std::string& flag, const std::string& text) {
  const Rational q = parse_rational(flag, text);
  if (!q.is_integer()) throw UsageError("--" + flag + ": expected an integer, got '" + text + "'");
  return q.num();
}

// Accepts plain integers and exact powers of ten written as "1e6" or "5e4".
std::uint64_t parse_count(const std::string& flag, const std::string& text) {
  const auto e = text.find_first_of("eE");
  try {
    std::size_t used = 0;
    if (e == std::string::npos) {
      const auto v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing text");
      return v;
    }
    const auto mant = std::stoull(text.substr(0, e), &used);
    if (used != e) throw std::invalid_argument("bad mantissa");
    const std::string ex = text.substr(e + 1);
    const auto exp = std::stoul(ex, &used);
    if (used != ex.size() || exp > 19) throw std::invalid_argument("bad exponent");
    unsigned __int128 v = mant;
    for (unsigned long i = 0; i < exp; ++i) v *= 10;
    if (v > std::numeric_limits<std::uint64_t>::max()) throw std::out_of_range("too large");
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw UsageError("--" + flag + ": expected an integer such as 1000000 or 1e6, got '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

CurveModel curve_from_flags(const std::string& A, const std::string& B, const std::string& model) {
  if (!model.empty()) {
    if (!A.empty() || !B.empty()) throw UsageError("give either --A/--B or --model, not both");
    const auto parts = split(model, ',');
    if (parts.size() != 4) throw UsageError("--model expects c,a2,a1,a0");
    return CurveModel::make(parse_rational("model", parts[0]), parse_rational("model", parts[1]),
                            parse_rational("model", parts[2]), parse_rational("model", parts[3]));
  }
  if (A.empty() || B.empty()) throw UsageError("a curve needs --A and --B, or --model c,a2,a1,a0");
  return CurveModel::make(1, 0, parse_rational("A", A), parse_rational("B", B));
}

void emit(std::ostream& out, const json& j, const std::string& path) {
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << '\n';
  }
  out << j.dump(2) << '\n';
}

int exit_for(const PipelineResult& r) {
  return std::holds_alternative<Degenerate>(r) ? kExitDegenerate : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic sextic points on elliptic curves", "sextic"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Also write the JSON result to this file");

  // delta
  auto* delta = app.add_subcommand("delta", "Discriminant of the intersection cubic at (A, B, T, U)");
  std::string dA, dB, dT, dU;
  delta->add_option("--A", dA)->required();
  delta->add_option("--B", dB)->required();
  delta->add_option("--T", dT)->required();
  delta->add_option("--U", dU)->required();

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "From a point on S6(E) to its cyclic sextic field");
  std::string pA, pB, pModel, pU, pD, pT;
  pipe->add_option("--A", pA);
  pipe->add_option("--B", pB);
  pipe->add_option("--model", pModel, "c,a2,a1,a0 for c y^2 = x^3 + a2 x^2 + a1 x + a0");
  pipe->add_option("--U", pU)->required();
  pipe->add_option("--D", pD)->required();
  pipe->add_option("--T", pT)->required();

  // family
  auto* fam = app.add_subcommand("family", "Closed-form family points");
  fam->require_subcommand(1);
  auto* f_isog = fam->add_subcommand("isog3", "y^2 = x^3 + a(x - b)^2");
  std::string fa, fb, fm, fn, fs;
  bool raw = false;
  f_isog->add_option("--a", fa)->required();
  f_isog->add_option("--b", fb)->required();
  f_isog->add_option("--m", fm);
  f_isog->add_option("--n", fn);
  f_isog->add_flag("--raw", raw, "Use the raw parameter s instead of (m, n)");
  f_isog->add_option("--s", fs, "Raw parameter, with --raw");
  auto* f_160 = fam->add_subcommand("160b1", "y^2 = x^3 - 4x^2 - x");
  std::string gm, gn;
  f_160->add_option("--m", gm)->required();
  f_160->add_option("--n", gn)->required();
  auto* f_e2 = fam->add_subcommand("e2cyclic", "3b y^2 = x^3 - 3(3c^2 + 1)x - 2(3c^2 + 1), section 2P");
  std::string eb, ec, eT;
  f_e2->add_option("--b", eb)->required();
  f_e2->add_option("--c", ec)->required();
  f_e2->add_option("--T", eT)->required();

  // fibration
  auto* fib = app.add_subcommand("fibration", "Elliptic fibration of S6(y^2 = x^3 + A x + B)");
  fib->require_subcommand(1);
  auto* fib_check = fib->add_subcommand("check", "Section, torsion and fiber checks");
  std::string bA, bB, bT0, bPrimes = "5,7,11,13,17";
  fib_check->add_option("--A", bA)->required();
  fib_check->add_option("--B", bB)->required();
  fib_check->add_option("--T0", bT0, "Also compare point counts with the isogenous model at this fiber");
  fib_check->add_option("--primes", bPrimes, "Primes for the point counts");

  // census
  auto* cen = app.add_subcommand("census", "Square-free values of the conductor form");
  std::string ca = "1", cb = "1", climit, cgrid, ccsv;
  unsigned workers = 1;
  bool values = false;
  cen->add_option("--a", ca);
  cen->add_option("--b", cb);
  cen->add_option("--limit", climit)->required();
  cen->add_option("--grid", cgrid, "Comma-separated checkpoints, e.g. 1e4,1e5,1e6");
  cen->add_option("--workers", workers);
  cen->add_option("--csv", ccsv, "Write X,count,slope_so_far to this file");
  cen->add_flag("--values", values, "Include every counted value with a witness (m, n)");

  // verify
  auto* ver = app.add_subcommand("verify", "Pinned checks of the worked examples and identities");
  std::string item;
  bool list = false;
  ver->add_option("item", item);
  ver->add_flag("--list", list);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (delta->parsed()) {
      const Rational v = delta_formula(parse_rational("A", dA), parse_rational("B", dB), parse_rational("T", dT),
                                       parse_rational("U", dU));
      emit(out, {{"delta", v.str()}}, out_path);
      return kExitOk;
    }
    if (pipe->parsed()) {
      const CurveModel e = curve_from_flags(pA, pB, pModel);
      const S6Point p{parse_rational("U", pU), parse_rational("D", pD), parse_rational("T", pT)};
      const PipelineResult r = point_to_sextic_field(e, p);
      emit(out, to_json(r), out_path);
      return exit_for(r);
    }
    if (f_isog->parsed()) {
      if (raw) {
        if (fs.empty()) throw UsageError("--raw needs --s");
        const Rational a = parse_rational("a", fa), b = parse_rational("b", fb);
        const S6Point p = isog3_point_raw(a, b, parse_rational("s", fs));
        const PipelineResult r = point_to_sextic_field(isog3_curve(a, b), p);
        emit(out,
             {{"family", "isog3"},
              {"convention", "raw"},
              {"parameters", {{"a", a.str()}, {"b", b.str()}, {"s", fs}}},
              {"curve", to_json(isog3_curve(a, b))},
              {"s6point", to_json(p)},
              {"construction", to_json(r)}},
             out_path);
        return exit_for(r);
      }
      if (fm.empty() || fn.empty()) throw UsageError("family isog3 needs --m and --n (or --raw --s)");
      const FamilyRecord r = isog3_record(parse_integer("a", fa), parse_integer("b", fb), parse_integer("m", fm),
                                          parse_integer("n", fn));
      emit(out, to_json(r), out_path);
      return exit_for(r.construction);
    }
    if (f_160->parsed()) {
      const FamilyRecord r = e160b1_record(parse_integer("m", gm), parse_integer("n", gn));
      emit(out, to_json(r), out_path);
      return exit_for(r.construction);
    }
    if (f_e2->parsed()) {
      const FamilyRecord r =
          e2cyclic_record(parse_rational("b", eb), parse_rational("c", ec), parse_rational("T", eT));
      emit(out, to_json(r), out_path);
      return exit_for(r.construction);
    }
    if (fib_check->parsed()) {
      const Rational A = parse_rational("A", bA), B = parse_rational("B", bB);
      const ProofRecord t3 = check_T3_torsion(A, B);
      const ProofRecord pinf = check_Pinf_on_curve(A, B);
      json j{{"A", A.str()},
             {"B", B.str()},
             {"T3", to_json(t3)},
             {"P_inf", to_json(pinf)},
             {"symbolic",
              {{"psi3_zero", psi3_zero_identity()},
               {"T3", t3_identity()},
               {"P_inf", pinf_identity()},
               {"uv_to_xy", uv_xy_identity()}}},
             {"fiber_profile", to_json(fiber_profile(A, B))}};
      if (!bT0.empty()) {
        std::vector<long> primes;
        for (const auto& s : split(bPrimes, ',')) primes.push_back(static_cast<long>(parse_count("primes", s)));
        j["isogeny"] = to_json(isogeny_pointcount_check(A, B, parse_rational("T0", bT0), primes));
      }
      const bool ok = t3.all() && pinf.all();
      j["all"] = ok;
      emit(out, j, out_path);
      return ok ? kExitOk : kExitError;
    }
    if (cen->parsed()) {
      CensusConfig cfg;
      const BigInt a = parse_integer("a", ca), b = parse_integer("b", cb);
      if (!a.fits_slong_p() || !b.fits_slong_p()) throw UsageError("--a and --b must fit in 64 bits");
      cfg.a = a.get_si();
      cfg.b = b.get_si();
      cfg.limit = parse_count("limit", climit);
      if (!cgrid.empty()) {
        for (const auto& s : split(cgrid, ',')) cfg.grid.push_back(parse_count("grid", s));
      }
      cfg.workers = workers;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const CensusReport rep = run_census(cfg);
      if (!ccsv.empty()) {
        std::ofstream f(ccsv);
        if (!f) throw std::runtime_error("cannot write " + ccsv);
        write_census_csv(f, rep);
      }
      emit(out, to_json(rep, values), out_path);
      return kExitOk;
    }
    if (ver->parsed()) {
      if (list) {
        for (const auto& n : verify_item_names()) out << n << '\n';
        return kExitOk;
      }
      std::vector<VerifyItem> items;
      if (item.empty()) {
        items = verify_suite();
      } else {
        try {
          items.push_back(run_verify_item(item));
        } catch (const std::out_of_range& e) {
          err << "error: " << e.what() << "\n";
          return kExitUsage;
        }
      }
      json arr = json::array();
      for (const auto& i : items) arr.push_back(to_json(i));
      const bool ok = suite_passed(items);
      emit(out, {{"items", arr}, {"all_passed", ok}}, out_path);
      for (const auto& i : items) {
        if (i.gating && !i.passed()) err << "FAILED: " << i.name << (i.error.empty() ? "" : ": " + i.error) << '\n';
      }
      return ok ? kExitOk : kExitError;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace sextic::cli
