#include "bicross/scenarios.hpp"

#include <chrono>
#include <random>
#include <set>

#include "bicross/deform.hpp"
#include "bicross/families.hpp"
#include "bicross/iso.hpp"

#ifndef BICROSS_SCENARIO_FILE
#define BICROSS_SCENARIO_FILE "data/scenarios.json"
#endif

namespace bicross {

namespace {

std::size_t get_n(const json& spec) {
  if (!spec.contains("n")) return 1;
  if (!spec.at("n").is_number_integer() || spec.at("n").get<long long>() <= 0) {
    raise(ErrorKind::BadParameter, "n must be a positive integer");
  }
  return spec.at("n").get<std::size_t>();
}

Scalar get_scalar(const json& spec, const char* key, FieldDescriptor f) {
  if (!spec.contains(key)) raise(ErrorKind::BadParameter, std::string("missing parameter \"") + key + "\"");
  const json& v = spec.at(key);
  if (v.is_number_integer()) return Scalar::from_int(f, v.get<long long>());
  if (!v.is_string()) raise(ErrorKind::BadParameter, std::string("parameter \"") + key + "\" must be a scalar");
  return Scalar::parse(f, v.get<std::string>());
}

Vector get_vector(const json& spec, const char* key, FieldDescriptor f) {
  if (!spec.contains(key) || !spec.at(key).is_array()) {
    raise(ErrorKind::BadParameter, std::string("parameter \"") + key + "\" must be an array");
  }
  Vector out;
  for (const auto& e : spec.at(key)) {
    out.push_back(e.is_number_integer() ? Scalar::from_int(f, e.get<long long>()) : Scalar::parse(f, e.get<std::string>()));
  }
  return out;
}

std::string spec_name(const json& spec) {
  if (!spec.is_object() || !spec.contains("name") || !spec.at("name").is_string()) {
    raise(ErrorKind::BadParameter, "construction needs a \"name\"");
  }
  return spec.at("name").get<std::string>();
}

FieldDescriptor field_named(const std::string& key) { return key == "Q" ? FieldDescriptor::rationals() : parse_field(key); }

std::uint64_t budget_of(const json& params, std::uint64_t fallback) {
  return params.contains("budget") ? params.at("budget").get<std::uint64_t>() : fallback;
}

// ---------------------------------------------------------------------------
// Checks. Each returns the computed values under the keys its expectations use.

json check_complement_index(const json& params, FieldDescriptor f) {
  const MatchedPair mp = named_pair(params.at("pair"), f);
  const ComplementReport rep = classify_complements(mp, budget_of(params, 10'000'000));
  json out;
  out["index"] = rep.index ? json(*rep.index) : json("infinite");
  out["deformation_count"] = rep.deformation_count;
  out["class_sizes"] = rep.class_sizes;
  if (params.contains("compare")) {
    std::vector<std::string> matched;
    for (const auto& L : rep.representatives) {
      std::string hit = "?";
      for (const auto& cand : params.at("compare")) {
        if (are_isomorphic(L, named_algebra(cand, f)).verdict == IsoResult::Verdict::Yes) {
          hit = cand.at("label").get<std::string>();
          break;
        }
      }
      matched.push_back(hit);
    }
    std::sort(matched.begin(), matched.end());
    out["representatives"] = matched;
  }
  return out;
}

json check_infinite_index(const json& params, FieldDescriptor f) {
  const ComplementReport rep = classify_complements(named_pair(params.at("pair"), f));
  return {{"index", rep.index ? json(*rep.index) : json("infinite")}, {"certificate", !rep.certificate.empty()}};
}

json check_deformation_count(const json& params, FieldDescriptor f) {
  const json& pj = params.at("pair");
  const MatchedPair mp = named_pair(pj, f);
  const auto maps = enumerate_deformation_maps(mp, budget_of(params, 10'000'000));
  json out{{"count", maps.size()}};
  const std::string name = spec_name(pj);
  if (name == "canonical-L" || name == "canonical-m") {
    const auto fams = name == "canonical-L" ? closed_form_defmaps_L(get_n(pj), f) : closed_form_defmaps_m(get_n(pj), f);
    std::vector<std::size_t> sizes;
    std::set<std::string> closed, enumerated;
    auto key = [](const LinearMap& m) { return to_json(m).dump(); };
    for (const auto& fam : fams) {
      sizes.push_back(fam.maps.size());
      for (const auto& m : fam.maps) closed.insert(key(m));
    }
    for (const auto& m : maps) enumerated.insert(key(m));
    out["family_sizes"] = sizes;
    out["closed_form_equal"] = closed == enumerated;
  }
  return out;
}

json check_derivation_dim(const json& params, FieldDescriptor f) {
  return {{"dim", derivation_space(named_algebra(params.at("algebra"), f)).size()}};
}

json check_h5_delta(const json&, FieldDescriptor f) {
  const LieAlgebra h = make_h5(f);
  const LinearMap d = h5_delta(f);
  const bool der = is_derivation(h, d);
  return {{"is_derivation", der}, {"inner", der && is_inner(h, d).has_value()}, {"perfect", is_perfect(h)}};
}

json check_h5_deformations(const json&, FieldDescriptor f) {
  const MatchedPair mp = mp_h5(f);
  const auto maps = enumerate_deformation_maps(mp);
  std::set<std::size_t> dims;
  bool jacobi = true, tables = true;
  for (const auto& r : maps) {
    const LieAlgebra hr = r_deformation(mp, r);
    jacobi = jacobi && check_jacobi(hr).empty();
    if (r.is_zero()) continue;
    dims.insert(derived_algebra(hr).dim());
    tables = tables && hr == make_h_a(r(0, 0));
  }
  return {{"count", maps.size()}, {"jacobi", jacobi}, {"derived_dims", dims}, {"matches_h_a", tables}};
}

json check_tn_closed_form(const json& params, FieldDescriptor f) {
  const LieAlgebra base = make_l(get_n(params), f);
  const std::size_t n = get_n(params);
  bool equal = true;
  std::size_t families = 0;
  for (const auto& fam : enumerate_twisted_derivations(base)) {
    const Scalar l0 = fam.lambda[2 * n];
    bool zero_elsewhere = true;
    for (std::size_t i = 0; i < 2 * n; ++i) zero_elsewhere = zero_elsewhere && fam.lambda[i].is_zero();
    if (!zero_elsewhere) { equal = false; continue; }
    std::vector<LinearMap> closed;
    for (const auto& t : tn_closed_form_basis(f, n, l0)) closed.push_back(tn_to_twisted(t).delta);
    const std::size_t d = 2 * n + 1;
    equal = equal && matrix_span(f, d, d, closed) == matrix_span(f, d, d, fam.basis);
    ++families;
  }
  return {{"equal", equal}, {"lambda_count", families}};
}

json check_solvable_length(const json& params, FieldDescriptor f) {
  const auto len = solvable_length(named_algebra(params.at("algebra"), f));
  return {{"length", len ? json(*len) : json("not solvable")}};
}

json check_self_dual(const json& params, FieldDescriptor f) {
  const auto r = self_dual(named_algebra(params.at("algebra"), f));
  return {{"verdict", std::string(to_string(r.verdict))}, {"witness", r.radical_witness.has_value()}};
}

json check_iso(const json& params, FieldDescriptor f) {
  const LieAlgebra a = named_algebra(params.at("a"), f);
  const LieAlgebra b = named_algebra(params.at("b"), f);
  if (params.contains("map")) {
    const Matrix m = matrix_from_json(f, params.at("map"), b.dim(), a.dim());
    return {{"verified", verify_iso(a, b, m)}};
  }
  const auto r = are_isomorphic(a, b, budget_of(params, 2'000'000));
  return {{"verdict", std::string(to_string(r.verdict))}};
}

json check_sympathetic(const json& params, FieldDescriptor f) {
  const LieAlgebra h = make_sl2(f);
  const auto der = derivation_space(h);
  bool all_inner = true;
  for (const auto& d : der) all_inner = all_inner && is_inner(h, d).has_value();
  const std::size_t samples = params.value("samples", 5);
  std::mt19937 rng(static_cast<unsigned>(f.modulus()));
  std::uniform_int_distribution<std::uint32_t> coef(0, f.modulus() - 1);
  const LieAlgebra target = direct_product(abelian_algebra(f, 1, "k"), h);
  std::size_t yes = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Matrix d = Matrix::zero(f, 3, 3);
    for (const auto& b : der) d = d + Scalar::from_int(f, coef(rng)) * b;
    const LieAlgebra ext = h_lambda_delta(h, {h.zero(), d}, "F");
    if (are_isomorphic(ext, target).verdict == IsoResult::Verdict::Yes) ++yes;
  }
  return {{"derivation_dim", der.size()}, {"all_inner", all_inner}, {"isomorphic_samples", yes}};
}

json check_aut_triples(const json&, FieldDescriptor f) {
  const LieAlgebra h = make_sl2(f);
  const LinearMap delta = h.ad(h.unit("h"));
  const auto triples = enumerate_aut_triples(h, delta);
  const std::set<AutTriple> group(triples.begin(), triples.end());
  bool axioms = group.count(aut_identity(h)) == 1;
  bool hom = true;
  std::set<std::string> images;
  for (const auto& a : triples) {
    axioms = axioms && group.count(aut_inverse(a)) == 1 && aut_multiply(a, aut_inverse(a)) == aut_identity(h);
    const auto ea = semidirect_embed(a);
    images.insert(to_json(ea.h).dump() + ea.alpha.to_string() + to_json(ea.v).dump());
    for (const auto& b : triples) {
      const AutTriple ab = aut_multiply(a, b);
      axioms = axioms && group.count(ab) == 1;
      hom = hom && semidirect_embed(ab) == semidirect_multiply(ea, semidirect_embed(b));
    }
  }
  return {{"count", triples.size()},
          {"aut_count", aut_enumerate(h).size()},
          {"group_axioms", axioms},
          {"embedding_homomorphic", hom},
          {"embedding_injective", images.size() == triples.size()}};
}

json check_lalpha_classes(const json&, FieldDescriptor f) {
  bool agrees = true;
  for (std::uint32_t a = 1; a < f.modulus(); ++a)
    for (std::uint32_t b = 1; b < f.modulus(); ++b) {
      const Scalar al = Scalar::from_int(f, a), be = Scalar::from_int(f, b);
      const bool expect = al == be || al * be == Scalar::one(f);
      agrees = agrees && (are_isomorphic(make_Lalpha(al), make_Lalpha(be)).verdict == IsoResult::Verdict::Yes) == expect;
    }
  return {{"agrees", agrees}};
}

json run_kind(const std::string& kind, const json& params, FieldDescriptor f) {
  if (kind == "complement-index") return check_complement_index(params, f);
  if (kind == "infinite-index") return check_infinite_index(params, f);
  if (kind == "deformation-count") return check_deformation_count(params, f);
  if (kind == "derivation-dim") return check_derivation_dim(params, f);
  if (kind == "h5-delta") return check_h5_delta(params, f);
  if (kind == "h5-deformations") return check_h5_deformations(params, f);
  if (kind == "tn-closed-form") return check_tn_closed_form(params, f);
  if (kind == "solvable-length") return check_solvable_length(params, f);
  if (kind == "self-dual") return check_self_dual(params, f);
  if (kind == "iso") return check_iso(params, f);
  if (kind == "sympathetic") return check_sympathetic(params, f);
  if (kind == "aut-triples") return check_aut_triples(params, f);
  if (kind == "lalpha-classes") return check_lalpha_classes(params, f);
  raise(ErrorKind::BadParameter, "unknown scenario kind \"" + kind + "\"");
}

}  // namespace

LieAlgebra named_algebra(const json& spec, FieldDescriptor f) {
  const std::string name = spec_name(spec);
  if (name == "l") return make_l(get_n(spec), f);
  if (name == "L") return make_L(get_n(spec), f);
  if (name == "m") return make_m(get_n(spec), f);
  if (name == "h5") return make_h5(f);
  if (name == "sl2") return make_sl2(f);
  if (name == "L_minus1") return make_L_minus1(f);
  if (name == "Lalpha") return make_Lalpha(get_scalar(spec, "alpha", f));
  if (name == "abelian") return abelian_algebra(f, get_n(spec), "x");
  if (name == "lp1_f") return make_lp1_f(f);
  if (name == "l_a") return make_l_a(get_vector(spec, "a", f));
  if (name == "lp_b") return make_lp_b(get_vector(spec, "b", f));
  if (name == "lpp_b") return make_lpp_b(get_vector(spec, "b", f));
  if (name == "lbar_a") return make_lbar_a(get_vector(spec, "a", f));
  if (name == "lbarp_b") return make_lbarp_b(get_vector(spec, "b", f));
  if (name == "lbarpp_c") return make_lbarpp_c(get_n(spec), get_scalar(spec, "c", f));
  if (name == "h_a") return make_h_a(get_scalar(spec, "a", f));
  raise(ErrorKind::BadParameter, "unknown algebra \"" + name + "\"");
}

std::vector<std::string> named_algebra_names() {
  return {"l",     "L",    "m",     "h5",     "sl2",     "L_minus1", "Lalpha", "abelian", "lp1_f",
          "l_a",   "lp_b", "lpp_b", "lbar_a", "lbarp_b", "lbarpp_c", "h_a"};
}

MatchedPair named_pair(const json& spec, FieldDescriptor f) {
  const std::string name = spec_name(spec);
  if (name == "canonical-L") return mpcanon_L(get_n(spec), f);
  if (name == "canonical-m") return mpcanon_m(get_n(spec), f);
  if (name == "h5") return mp_h5(f);
  raise(ErrorKind::BadParameter, "unknown matched pair \"" + name + "\"");
}

bool ScenarioResult::passed() const {
  return !outcomes.empty() && std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.passed; });
}

std::string default_scenario_path() { return BICROSS_SCENARIO_FILE; }

std::vector<Scenario> load_scenarios(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.contains("scenarios") || !j.at("scenarios").is_array()) raise(ErrorKind::Format, path + ": missing \"scenarios\"");
  std::vector<Scenario> out;
  for (const auto& e : j.at("scenarios")) {
    Scenario s;
    try {
      s.id = e.at("id").get<std::string>();
      s.description = e.at("description").get<std::string>();
      s.source = e.at("source").get<std::string>();
      s.kind = e.at("kind").get<std::string>();
      s.fields = e.at("fields").get<std::vector<std::string>>();
      s.params = e.value("params", json::object());
      s.expected = e.at("expected");
    } catch (const json::exception& ex) {
      raise(ErrorKind::Format, path + ": scenario " + (s.id.empty() ? "?" : s.id) + ": " + ex.what());
    }
    out.push_back(std::move(s));
  }
  return out;
}

const Scenario& find_scenario(const std::vector<Scenario>& catalog, std::string_view id) {
  for (const auto& s : catalog)
    if (s.id == id) return s;
  raise(ErrorKind::UnknownScenario, "no scenario \"" + std::string(id) + "\"");
}

ScenarioResult run_scenario(const Scenario& s, std::optional<std::uint64_t> p) {
  ScenarioResult res{s.id, {}};
  std::vector<std::string> fields = s.fields;
  if (p) {
    const std::string key = std::to_string(*p);
    if (!s.expected.contains(key)) {
      raise(ErrorKind::BadParameter, "scenario " + s.id + " has no expectation over GF(" + key + ")");
    }
    fields = {key};
  }
  for (const auto& key : fields) {
    ScenarioOutcome o;
    o.field = key;
    o.expected = s.expected.at(key);
    const auto t0 = std::chrono::steady_clock::now();
    o.actual = run_kind(s.kind, s.params, field_named(key));
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.passed = true;
    for (const auto& [k, v] : o.expected.items()) o.passed = o.passed && o.actual.contains(k) && o.actual.at(k) == v;
    res.outcomes.push_back(std::move(o));
  }
  return res;
}

}  // namespace bicross
