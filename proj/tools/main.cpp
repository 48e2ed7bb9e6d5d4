// bicross: command-line front end. Exit codes: 0 success, 1 mathematical failure, 2 input error.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "bicross/deform.hpp"
#include "bicross/families.hpp"
#include "bicross/iso.hpp"
#include "bicross/scenarios.hpp"

using namespace bicross;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;

struct Globals {
  bool json_out = false;
  std::string field;
  std::uint64_t p = 0;
  std::uint64_t budget = 0;
  std::string out;
};

Globals g;

std::uint64_t budget_or(std::uint64_t fallback) { return g.budget ? g.budget : fallback; }

FieldDescriptor chosen_field(std::string_view fallback = "Q") {
  if (g.field.empty() && g.p) return FieldDescriptor::prime_field(g.p);
  if (g.field == "Fp") {
    if (!g.p) raise(ErrorKind::BadParameter, "--field Fp needs --p");
    return FieldDescriptor::prime_field(g.p);
  }
  return parse_field(g.field.empty() ? fallback : g.field);
}

// Either prints the JSON report or the human text; --out additionally saves the JSON.
void emit(const json& report, const std::string& text) {
  if (!g.out.empty()) write_json_file(g.out, report);
  if (g.json_out) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string format_element(const LieAlgebra& L, std::span<const Scalar> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string c = v[i].to_string();
    const bool neg = c.front() == '-';
    if (neg) c.erase(0, 1);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (c != "1") s += (c.find('/') != std::string::npos ? "(" + c + ")" : c);
    s += L.name(i);
  }
  return s.empty() ? "0" : s;
}

std::string bracket_table(const LieAlgebra& L) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      const Vector b = L.basis_bracket(i, j);
      if (is_zero_vector(b)) continue;
      os << "  [" << L.name(i) << ", " << L.name(j) << "] = " << format_element(L, b) << '\n';
      any = true;
    }
  if (!any) os << "  (abelian)\n";
  return os.str();
}

std::string format_map(const LieAlgebra& from, const LieAlgebra& to, const LinearMap& m) {
  std::string s;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (j) s += ", ";
    s += from.name(j) + " -> " + format_element(to, m.column(j));
  }
  return s;
}

std::string join_dims(const std::vector<std::size_t>& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

LieAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_json_file(path)); }
MatchedPair load_pair(const std::string& path) { return matched_pair_from_json(read_json_file(path)); }

json violations_json(const MatchedPair& mp, const std::vector<MatchedPairViolation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back({{"axiom", std::string(to_string(v.axiom))}, {"detail", v.describe(mp)}});
  return arr;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path) {
  const LieAlgebra L = load_algebra(path);
  const auto bad = check_jacobi(L);
  json report{{"dim", L.dim()}, {"jacobi", bad.empty()}, {"violations", json::array()}};
  std::ostringstream text;
  if (!bad.empty()) {
    text << "Jacobi: FAILED, " << bad.size() << " violating triple(s)\n";
    for (const auto& v : bad) {
      text << "  (" << L.name(v.i) << ", " << L.name(v.j) << ", " << L.name(v.l) << "): " << format_element(L, v.value)
           << '\n';
      report["violations"].push_back({{"triple", {L.name(v.i), L.name(v.j), L.name(v.l)}}, {"value", to_json(v.value)}});
    }
    emit(report, text.str());
    return kMathFailure;
  }
  const auto derived = dims(derived_series(L));
  report["derived_dims"] = derived;
  text << "Jacobi: OK, dim " << L.dim() << ", derived dims " << join_dims(derived) << '\n';
  emit(report, text.str());
  return kOk;
}

int cmd_info(const std::string& path) {
  const LieAlgebra L = load_algebra(path);
  if (!check_jacobi(L).empty()) raise(ErrorKind::BadParameter, "not a Lie algebra (Jacobi fails); run validate");
  const auto derived = dims(derived_series(L));
  const auto lower = dims(lower_central_series(L));
  const auto len = solvable_length(L);
  const std::size_t der = derivation_space(L).size();
  const std::size_t z = center(L).dim();
  const bool nilpotent = lower.back() == 0;
  json report{{"field", to_json(L.field())}, {"dim", L.dim()}, {"derived_dims", derived},
              {"lower_central_dims", lower}, {"center_dim", z}, {"perfect", is_perfect(L)},
              {"solvable_length", len ? json(*len) : json(nullptr)}, {"nilpotent", nilpotent},
              {"derivation_dim", der}, {"fingerprint", fingerprint(L).to_string()}};
  std::ostringstream os;
  os << std::left;
  auto row = [&](const std::string& k, const std::string& v) { os << "  " << std::setw(20) << k << v << '\n'; };
  row("field", L.field().to_string());
  row("dim", std::to_string(L.dim()));
  row("derived dims", join_dims(derived));
  row("lower central dims", join_dims(lower));
  row("center dim", std::to_string(z));
  row("perfect", is_perfect(L) ? "yes" : "no");
  row("solvable length", len ? std::to_string(*len) : "not solvable");
  row("nilpotent", nilpotent ? "yes" : "no");
  row("Der dim", std::to_string(der));
  os << "brackets:\n" << bracket_table(L);
  emit(report, os.str());
  return kOk;
}

int cmd_derivations(const std::string& path) {
  const LieAlgebra L = load_algebra(path);
  const auto der = derivation_space(L);
  std::size_t inner = 0;
  json basis = json::array();
  std::ostringstream os;
  for (std::size_t k = 0; k < der.size(); ++k) {
    const bool in = is_inner(L, der[k]).has_value();
    inner += in;
    basis.push_back({{"matrix", to_json(der[k])}, {"inner", in}});
    os << "  D" << k + 1 << (in ? " (inner): " : ":         ") << format_map(L, L, der[k]) << '\n';
  }
  const std::size_t inner_dim = L.dim() - center(L).dim();
  json report{{"dim", der.size()}, {"inner_dim", inner_dim}, {"basis", basis}};
  emit(report, "Der dim " + std::to_string(der.size()) + ", inner dim " + std::to_string(inner_dim) + "\n" + os.str());
  return kOk;
}

Vector parse_lambda(const LieAlgebra& L, const std::vector<std::string>& items) {
  Vector lambda = L.zero();
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string term;
    while (std::getline(ss, term, ',')) {
      const auto eq = term.find('=');
      if (eq == std::string::npos) raise(ErrorKind::BadParameter, "--lambda expects NAME=VALUE, got \"" + term + "\"");
      lambda[L.require_index(term.substr(0, eq))] = Scalar::parse(L.field(), term.substr(eq + 1));
    }
  }
  return lambda;
}

int cmd_twisted(const std::string& path, const std::vector<std::string>& lambda_items) {
  const LieAlgebra L = load_algebra(path);
  std::vector<TwistedFamily> families;
  if (!lambda_items.empty()) {
    Vector lambda = parse_lambda(L, lambda_items);
    families.push_back({lambda, twisted_derivations_for_lambda(L, lambda)});
  } else {
    families = enumerate_twisted_derivations(L, budget_or(1'000'000));
  }
  json report = json::array();
  std::ostringstream os;
  for (const auto& fam : families) {
    report.push_back({{"lambda", to_json(fam.lambda)}, {"dim", fam.basis.size()}, {"basis", json::array()}});
    os << "lambda = (";
    for (std::size_t i = 0; i < fam.lambda.size(); ++i) os << (i ? ", " : "") << fam.lambda[i].to_string();
    os << "): dim " << fam.basis.size() << '\n';
    for (const auto& d : fam.basis) {
      report.back()["basis"].push_back(to_json(d));
      os << "  " << format_map(L, L, d) << '\n';
    }
  }
  emit(report, os.str());
  return kOk;
}

int cmd_matched_check(const std::string& path) {
  const MatchedPair mp = load_pair(path);
  const auto vs = check_matched_pair(mp);
  std::ostringstream os;
  if (vs.empty()) {
    os << "matched pair: OK (dim g " << mp.g.dim() << ", dim h " << mp.h.dim() << ")\n";
  } else {
    os << "matched pair: FAILED, " << vs.size() << " violation(s)\n";
    for (const auto& v : vs) os << "  " << v.describe(mp) << '\n';
  }
  emit({{"valid", vs.empty()}, {"violations", violations_json(mp, vs)}}, os.str());
  return vs.empty() ? kOk : kMathFailure;
}

int cmd_bicrossed(const std::string& path) {
  const MatchedPair mp = load_pair(path);
  const auto vs = check_matched_pair(mp);
  if (!vs.empty()) {
    std::ostringstream os;
    os << "not a matched pair: " << vs.size() << " violation(s)\n";
    for (const auto& v : vs) os << "  " << v.describe(mp) << '\n';
    emit({{"valid", false}, {"violations", violations_json(mp, vs)}}, os.str());
    return kMathFailure;
  }
  const LieAlgebra P = bicrossed_product(mp);
  emit(to_json(P), "g ⋈ h, dim " + std::to_string(P.dim()) + ":\n" + bracket_table(P));
  return kOk;
}

int cmd_deform_maps(const std::string& path) {
  const MatchedPair mp = load_pair(path);
  const auto maps = enumerate_deformation_maps(mp, budget_or(10'000'000));
  json report{{"count", maps.size()}, {"maps", json::array()}};
  std::ostringstream os;
  os << maps.size() << " deformation map(s)\n";
  for (std::size_t k = 0; k < maps.size(); ++k) {
    report["maps"].push_back(to_json(maps[k]));
    os << "  r" << std::setw(4) << std::left << k + 1 << format_map(mp.h, mp.g, maps[k]) << '\n';
  }
  emit(report, os.str());
  return kOk;
}

int cmd_complements(const std::string& path) {
  const MatchedPair mp = load_pair(path);
  const ComplementReport rep = classify_complements(mp, budget_or(10'000'000));
  json report{{"deformation_count", rep.deformation_count},
              {"index", rep.index ? json(*rep.index) : json("infinite")},
              {"classes", json::array()}};
  std::ostringstream os;
  os << "deformation maps: " << rep.deformation_count << '\n'
     << "factorization index: " << (rep.index ? std::to_string(*rep.index) : "infinite") << '\n';
  if (!rep.certificate.empty()) {
    report["certificate"] = rep.certificate;
    os << "certificate: " << rep.certificate << '\n';
  }
  os << std::left << "  " << std::setw(7) << "class" << std::setw(7) << "size" << "representative map\n";
  for (std::size_t c = 0; c < rep.representatives.size(); ++c) {
    const std::size_t size = c < rep.class_sizes.size() ? rep.class_sizes[c] : 0;
    report["classes"].push_back({{"size", size},
                                 {"map", to_json(rep.representative_maps[c])},
                                 {"algebra", to_json(rep.representatives[c])},
                                 {"fingerprint", fingerprint(rep.representatives[c]).to_string()}});
    os << "  " << std::setw(7) << c + 1 << std::setw(7) << (size ? std::to_string(size) : "-")
       << format_map(mp.h, mp.g, rep.representative_maps[c]) << '\n'
       << bracket_table(rep.representatives[c]);
  }
  emit(report, os.str());
  return kOk;
}

int cmd_iso(const std::string& pa, const std::string& pb) {
  const LieAlgebra a = load_algebra(pa);
  const LieAlgebra b = load_algebra(pb);
  const IsoResult r = are_isomorphic(a, b, budget_or(2'000'000));
  json report{{"verdict", std::string(to_string(r.verdict))}, {"nodes", r.nodes}};
  std::string text = "verdict: " + std::string(to_string(r.verdict)) + '\n';
  if (r.map) {
    report["map"] = to_json(*r.map);
    text += "map: " + format_map(a, b, *r.map) + '\n';
  }
  if (!r.certificate.empty()) {
    report["certificate"] = r.certificate;
    text += "reason: " + r.certificate + '\n';
  }
  emit(report, text);
  return kOk;
}

int cmd_aut(const std::string& path, const std::string& delta_path) {
  const LieAlgebra h = load_algebra(path);
  const std::uint64_t budget = budget_or(2'000'000);
  if (delta_path.empty()) {
    const auto auts = aut_enumerate(h, budget);
    json report{{"count", auts.size()}, {"automorphisms", json::array()}};
    std::ostringstream os;
    os << "|Aut| = " << auts.size() << '\n';
    for (const auto& m : auts) {
      report["automorphisms"].push_back(to_json(m));
      os << "  " << format_map(h, h, m) << '\n';
    }
    emit(report, os.str());
    return kOk;
  }
  const LinearMap delta = matrix_from_json(h.field(), read_json_file(delta_path), h.dim(), h.dim());
  const auto triples = enumerate_aut_triples(h, delta, budget);
  json report{{"count", triples.size()}, {"triples", json::array()}};
  std::ostringstream os;
  os << triples.size() << " triple(s) (alpha, h0, v)\n";
  for (const auto& t : triples) {
    report["triples"].push_back({{"alpha", t.alpha.to_string()}, {"h0", to_json(t.h0)}, {"v", to_json(t.v)}});
    os << "  alpha " << t.alpha.to_string() << ", h0 " << format_element(h, t.h0) << ", v: " << format_map(h, h, t.v)
       << '\n';
  }
  emit(report, os.str());
  return kOk;
}

bool is_pair_name(const std::string& name) { return name == "canonical-L" || name == "canonical-m" || name == "h5"; }

int cmd_families(const std::string& name, std::size_t n, const std::vector<std::string>& params) {
  const FieldDescriptor f = chosen_field();
  json spec{{"name", name}, {"n", n}};
  for (const auto& item : params) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) raise(ErrorKind::BadParameter, "--param expects KEY=VALUE, got \"" + item + "\"");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (value.find(',') != std::string::npos || key == "a" || key == "b") {
      json arr = json::array();
      std::stringstream ss(value);
      std::string part;
      while (std::getline(ss, part, ',')) arr.push_back(part);
      spec[key] = arr;
    } else {
      spec[key] = value;
    }
  }
  if (is_pair_name(name)) {
    const MatchedPair mp = named_pair(spec, f);
    emit(to_json(mp), "pair " + name + ": dim g " + std::to_string(mp.g.dim()) + ", dim h " +
                          std::to_string(mp.h.dim()) + (g.out.empty() ? "" : ", written to " + g.out) + "\n");
    return kOk;
  }
  const LieAlgebra L = named_algebra(spec, f);
  emit(to_json(L), name + " over " + f.to_string() + ", dim " + std::to_string(L.dim()) +
                       (g.out.empty() ? "" : ", written to " + g.out) + "\n" + bracket_table(L));
  return kOk;
}

int cmd_paper_verify(const std::string& id, bool all, const std::string& catalog_path) {
  const auto catalog = load_scenarios(catalog_path.empty() ? default_scenario_path() : catalog_path);
  if (!all && id.empty()) raise(ErrorKind::BadParameter, "give a scenario id or --all");
  std::vector<const Scenario*> chosen;
  if (all) {
    for (const auto& s : catalog) chosen.push_back(&s);
  } else {
    chosen.push_back(&find_scenario(catalog, id));
  }
  const std::optional<std::uint64_t> p = g.p ? std::optional(g.p) : std::nullopt;
  json report = json::array();
  std::ostringstream os;
  os << std::left;
  bool ok = true;
  for (const Scenario* s : chosen) {
    if (all && p && !s->expected.contains(std::to_string(*p))) continue;
    const ScenarioResult r = run_scenario(*s, p);
    ok = ok && r.passed();
    json outcomes = json::array();
    for (const auto& o : r.outcomes) {
      outcomes.push_back({{"field", o.field}, {"passed", o.passed}, {"expected", o.expected}, {"actual", o.actual},
                          {"seconds", o.seconds}});
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << o.seconds << " s";
      os << std::setw(6) << (o.passed ? "PASS" : "FAIL") << std::setw(22) << s->id << std::setw(8)
         << (o.field == "Q" ? "Q" : "GF(" + o.field + ")") << std::setw(11) << secs.str() << s->description << '\n';
      if (!o.passed) os << "      expected " << o.expected.dump() << "\n      actual   " << o.actual.dump() << '\n';
    }
    report.push_back({{"id", s->id}, {"source", s->source}, {"passed", r.passed()}, {"outcomes", outcomes}});
  }
  emit(report, os.str());
  return ok ? kOk : kMathFailure;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Format:
    case ErrorKind::BadParameter:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::FieldMismatch:
    case ErrorKind::NotPrime:
    case ErrorKind::UnknownScenario:
    case ErrorKind::LambdaNotAdmissible:
    case ErrorKind::NotFinite:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::CharTwo:
      return kInputError;
    default:
      return kMathFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Lie algebras given by structure constants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json_out, "Emit a JSON report");
  app.add_option("--field", g.field, "Q, Fp (with --p) or GF(p)");
  app.add_option("--p", g.p, "Prime for Fp / scenario field override");
  app.add_option("--budget", g.budget, "Search budget");
  app.add_option("--out", g.out, "Also write the JSON report to this path");

  std::string file, pair_file, a_file, b_file, delta_file, make, scenario, catalog;
  std::vector<std::string> lambda_items, params;
  std::size_t n = 1;
  bool all = false;
  std::function<int()> run;

  auto* validate = app.add_subcommand("validate", "Check Jacobi and print the derived series");
  validate->add_option("file", file, "Algebra JSON")->required();
  validate->callback([&] { run = [&] { return cmd_validate(file); }; });

  auto* info = app.add_subcommand("info", "Structural invariants");
  info->add_option("file", file, "Algebra JSON")->required();
  info->callback([&] { run = [&] { return cmd_info(file); }; });

  auto* der = app.add_subcommand("derivations", "Basis of Der(L)");
  der->add_option("file", file, "Algebra JSON")->required();
  der->callback([&] { run = [&] { return cmd_derivations(file); }; });

  auto* tw = app.add_subcommand("twisted-derivations", "Twisted derivations, for one lambda or all (finite fields)");
  tw->add_option("file", file, "Algebra JSON")->required();
  tw->add_option("--lambda", lambda_items, "Covector as NAME=VALUE[,...], e.g. G=1");
  tw->callback([&] { run = [&] { return cmd_twisted(file, lambda_items); }; });

  auto* bic = app.add_subcommand("bicrossed", "Bicrossed product of a matched pair");
  bic->add_option("--pair", pair_file, "Matched pair JSON")->required();
  bic->callback([&] { run = [&] { return cmd_bicrossed(pair_file); }; });

  auto* mc = app.add_subcommand("matched-check", "Check the matched-pair axioms");
  mc->add_option("--pair", pair_file, "Matched pair JSON")->required();
  mc->callback([&] { run = [&] { return cmd_matched_check(pair_file); }; });

  auto* dm = app.add_subcommand("deform-maps", "Enumerate deformation maps over GF(p)");
  dm->add_option("--pair", pair_file, "Matched pair JSON")->required();
  dm->callback([&] { run = [&] { return cmd_deform_maps(pair_file); }; });

  auto* comp = app.add_subcommand("complements", "Classify complements and the factorization index");
  comp->add_option("--pair", pair_file, "Matched pair JSON")->required();
  comp->callback([&] { run = [&] { return cmd_complements(pair_file); }; });

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  iso->add_option("--a", a_file, "Algebra JSON")->required();
  iso->add_option("--b", b_file, "Algebra JSON")->required();
  iso->callback([&] { run = [&] { return cmd_iso(a_file, b_file); }; });

  auto* aut = app.add_subcommand("aut", "Automorphisms, or the triple group for --delta");
  aut->add_option("--algebra", file, "Algebra JSON")->required();
  aut->add_option("--delta", delta_file, "Derivation matrix JSON (array of rows)");
  aut->callback([&] { run = [&] { return cmd_aut(file, delta_file); }; });

  auto* fam = app.add_subcommand("families", "Build a named algebra or matched pair");
  std::string names = "algebras:";
  for (const auto& s : named_algebra_names()) names += " " + s;
  fam->footer(names + "\npairs: canonical-L canonical-m h5");
  fam->add_option("--make", make, "Family name")->required();
  fam->add_option("--n", n, "Size parameter");
  fam->add_option("--param", params, "KEY=VALUE (comma-separated for vectors), e.g. alpha=3 or a=1,2");
  fam->callback([&] { run = [&] { return cmd_families(make, n, params); }; });

  auto* pv = app.add_subcommand("paper-verify", "Run bundled verification scenarios");
  pv->add_option("id", scenario, "Scenario id");
  pv->add_flag("--all", all, "Run every scenario");
  pv->add_option("--catalog", catalog, "Scenario file (default: bundled)");
  pv->callback([&] { run = [&] { return cmd_paper_verify(scenario, all, catalog); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
