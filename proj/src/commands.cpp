#include "gmr/commands.hpp"

#include <chrono>
#include <map>

#include "gmr/radical.hpp"
#include "gmr/spec_document.hpp"

namespace gmr {

using nlohmann::json;

std::string describe(const CommandOptions& o) {
  std::string s = o.command;
  if (o.command == "radical") s += " --method " + o.method;
  if (o.command == "ideals") s += " --flavor " + o.flavor;
  if (o.command == "quotient") s += " --ideal " + o.ideal;
  if (o.command == "verify") s += " --suite " + o.suite;
  if (o.max_order) s += " --max-order " + std::to_string(*o.max_order);
  if (o.max_lattice) s += " --max-lattice " + std::to_string(*o.max_lattice);
  if (o.max_radical) s += " --max-radical " + std::to_string(*o.max_radical);
  return s;
}

namespace {

json ring_members(const GMRing& ring, const std::vector<Index>& members) {
  json a = json::array();
  for (Index x : members) a.push_back(ring.format(x));
  return a;
}

json group_members(const FinAbGroup& g, const std::vector<Index>& members) {
  json a = json::array();
  for (Index x : members) a.push_back(g.element(x).to_string());
  return a;
}

std::string component_name(const GammaSystem& s, std::size_t i, std::size_t j) {
  return s.label(i) + "," + s.label(j);
}

void add_components(Report& r, const GammaSystem& s) {
  auto& sec = r.section("components", {"component", "factors", "order"});
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      sec.rows.push_back({component_name(s, i, j), s.component(i, j).factors(), s.component(i, j).order()});
}

bool any_failed(const Report& r) {
  for (const auto& v : r.verdicts)
    if (v.status == VerdictStatus::Fail) return true;
  return false;
}

// ---------------------------------------------------------------------------

void cmd_check(Report& r, const GammaSystem& s, const Caps& caps) {
  add_components(r, s);
  const auto axioms = check_gamma_axioms(s, AxiomCheckMode::Generators, caps, 16);
  Verdict v{"gamma-axioms", "products are biadditive and associative across indices", VerdictStatus::Pass,
            std::to_string(axioms.violation_count) + " violations (generator reduction)", ""};
  if (!axioms.ok()) {
    v.status = VerdictStatus::Fail;
    v.witness = axioms.violations.front().describe(s);
    auto& sec = r.section("violations", {"axiom", "indices", "witness"});
    for (const auto& w : axioms.violations) sec.rows.push_back({w.axiom, w.indices, w.describe(s)});
  }
  r.verdicts.push_back(v);
  if (!axioms.ok()) return;
  const auto ring = GMRing::assemble(s, caps);
  const auto self = ring_self_test(ring);
  r.verdicts.push_back(Verdict{"ring-axioms", "the assembled g.m. ring is associative and distributive",
                               self.ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                               ring.order() <= 64 ? "exhaustive" : "on additive generators", self.witness});
  auto& sec = r.section("ring", {"index set", "order", "additive factors"});
  sec.rows.push_back({s.labels(), ring.order(), ring.additive().factors()});
}

RadicalMethod parse_method(const std::string& m) {
  static const std::map<std::string, RadicalMethod> names{{"m", RadicalMethod::MNilpotent},
                                                          {"primes-gm", RadicalMethod::PrimesGM},
                                                          {"primes-ring", RadicalMethod::PrimesRing},
                                                          {"nilpotent", RadicalMethod::NilpotentIdeal},
                                                          {"gm-max", RadicalMethod::GMMaximal}};
  auto it = names.find(m);
  if (it == names.end()) invalid_input("E_OPTION", "unknown radical method '" + m + "'");
  return it->second;
}

void cmd_radical(Report& r, const GammaSystem& s, const Caps& caps, const std::string& method) {
  const auto ring = GMRing::assemble(s, caps);
  std::vector<RadicalMethod> methods;
  if (method == "all")
    methods = {RadicalMethod::MNilpotent, RadicalMethod::PrimesGM, RadicalMethod::PrimesRing,
               RadicalMethod::NilpotentIdeal, RadicalMethod::GMMaximal};
  else
    methods = {parse_method(method)};
  std::vector<RadicalResult> results;
  for (auto m : methods) results.push_back(compute_radical(ring, m, caps));

  {
    auto& sec = r.section("radicals", {"method", "order", "members"});
    for (const auto& res : results) sec.rows.push_back({to_string(res.method), res.members.size(), ring_members(ring, res.members)});
  }
  {
    auto& sec = r.section("notes", {"method", "note"});
    for (const auto& res : results)
      for (const auto& n : res.notes) sec.rows.push_back({to_string(res.method), n});
  }
  for (const auto& res : results) {
    if (res.method == RadicalMethod::NilpotentIdeal) {
      auto& sec = r.section("nilpotency", {"exponent"});
      sec.rows.push_back({res.nilpotency_exponent});
    }
    if (!res.primes.empty()) {
      auto& sec = r.section(std::string("prime ideals ") + to_string(res.method), {"order", "members"});
      for (const auto& p : res.primes) sec.rows.push_back({p.size(), ring_members(ring, p)});
    }
  }
  if (results.size() > 1) {
    Verdict v{"agreement", "all five radical engines return the same ideal", VerdictStatus::Pass,
              "radical of order " + std::to_string(results.front().members.size()), ""};
    for (const auto& res : results)
      if (res.members != results.front().members) {
        v.status = VerdictStatus::Fail;
        v.witness += std::string(to_string(res.method)) + " has order " + std::to_string(res.members.size()) + "; ";
      }
    r.verdicts.push_back(v);
  }
}

const char* primality_label(const GMRing& ring, const GMIdeal& b) {
  if (b.is_whole()) return "improper";
  return to_string(ideal_primality(ring, b).primality);
}

void cmd_ideals(Report& r, const GammaSystem& s, const Caps& caps, const std::string& flavor) {
  if (flavor != "gm" && flavor != "ring") invalid_input("E_OPTION", "unknown flavor '" + flavor + "'");
  const auto ring = GMRing::assemble(s, caps);
  const auto f = flavor == "gm" ? Flavor::GM : Flavor::Ring;
  const auto ideals = enumerate_ideals(ring, f, caps);
  auto& sec = r.section("ideals", {"#", "order", "generators", "componentwise", "primality", "members"});
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const auto& b = ideals[k];
    const auto gm = GMIdeal::from_members(ring, b.members(), Flavor::GM);
    const bool comp = GMIdeal::from_components(ring, gm.components()).members() == b.members();
    sec.rows.push_back({k, b.order(), ring_members(ring, b.members().generators()), comp, primality_label(ring, b),
                        ring_members(ring, b.members().members())});
  }
  auto& summary = r.section("summary", {"flavor", "ring order", "ideals"});
  summary.rows.push_back({flavor, ring.order(), ideals.size()});
}

void cmd_quotient(Report& r, const SpecDocument& doc, const GammaSystem& s, const Caps& caps, const std::string& name) {
  if (name.empty()) invalid_input("E_OPTION", "quotient needs --ideal NAME");
  const auto ring = GMRing::assemble(s, caps);
  const auto gens = doc.ideal_generators(ring, name);
  const auto b = gm_ideal_closure(ring, gens, Flavor::GM, caps);
  {
    auto& sec = r.section("ideal", {"name", "generators", "order", "members"});
    sec.rows.push_back({name, ring_members(ring, gens), b.order(), ring_members(ring, b.members().members())});
  }
  const auto q = quotient(ring, b, caps);
  const auto hom = verify_gm_hom(q.projection);
  const bool kernel_ok = hom.ok && hom.kernel->members() == b.members();
  r.verdicts.push_back(Verdict{"projection", "A -> A//B is a surjective g.m. homomorphism with kernel B",
                               hom.ok && hom.surjective && kernel_ok ? VerdictStatus::Pass : VerdictStatus::Fail,
                               "quotient order " + std::to_string(q.ring.order()),
                               hom.ok ? (kernel_ok ? "" : "kernel differs from B") : hom.witness});
  add_components(r, q.ring.system());
  {
    auto& sec = r.section("cosets", {"coset", "least representative"});
    std::vector<Index> rep(q.ring.order(), kOutside);
    for (Index x = 0; x < ring.order(); ++x) {
      auto y = q.projection.apply(x);
      if (rep[y] == kOutside) rep[y] = x;
    }
    for (Index y = 0; y < q.ring.order(); ++y) sec.rows.push_back({q.ring.format(y), ring.format(rep[y])});
  }
  const auto w = w_set(q.ring, caps);
  auto& sec = r.section("quotient radical", {"order", "members"});
  sec.rows.push_back({w.members.size(), ring_members(q.ring, w.members)});
}

void cmd_components(Report& r, const GammaSystem& s, const Caps& caps) {
  auto& sec = r.section("component radicals",
                        {"component", "order", "radical order", "semiprime", "prime", "radical"});
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      const auto rad = gamma_baer_radical(s, i, j, caps);
      const auto p = gamma_ring_primality(s, i, j);
      sec.rows.push_back({component_name(s, i, j), s.component(i, j).order(), rad.members.size(), p.semiprime, p.prime,
                          group_members(s.component(i, j), rad.members)});
    }
}

void verify_radical(Report& r, const GMRing& ring, const Caps& caps) {
  const auto rep = verify_radical_theorems(ring, caps);
  for (const auto& v : rep.report.verdicts) r.verdicts.push_back(v);
  {
    auto& sec = r.section("radical methods", {"method", "order", "members"});
    for (const auto& m : rep.methods) sec.rows.push_back({to_string(m.method), m.members.size(), ring_members(ring, m.members)});
  }
  if (rep.components.empty()) return;
  const auto& s = ring.system();
  const auto& w = rep.methods.front().members;
  auto& sec = r.section("decomposition", {"component", "r_b(A_ij)", "W(A) entries", "equal"});
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::set<Index> proj;
      for (Index x : w) proj.insert(ring.entry(x, i, j));
      const std::vector<Index> pv(proj.begin(), proj.end());
      const auto& g = s.component(i, j);
      const auto& rad = rep.components[i * s.size() + j].members;
      sec.rows.push_back({component_name(s, i, j), group_members(g, rad), group_members(g, pv), pv == rad});
    }
}

void verify_iso(Report& r, const SpecDocument& doc, const GMRing& ring, const Caps& caps) {
  std::vector<std::pair<std::string, GMIdeal>> ideals;
  std::string scope;
  if (ring.order() <= 64) {
    const auto all = enumerate_ideals(ring, Flavor::GM, caps);
    for (std::size_t k = 0; k < all.size(); ++k) ideals.emplace_back("I" + std::to_string(k), all[k]);
    scope = "all g.m. ideal pairs";
  } else {
    auto add = [&](std::string label, GMIdeal b) {
      for (const auto& [_, c] : ideals)
        if (c == b) return;
      ideals.emplace_back(std::move(label), std::move(b));
    };
    add("zero", zero_ideal(ring, Flavor::GM));
    const auto w = w_set(ring, caps);
    add("radical", GMIdeal::from_members(ring, Subgroup::from_members(ring.additive(), w.members), Flavor::GM));
    add("whole", whole_ideal(ring, Flavor::GM));
    for (const auto& [name, _] : doc.named_ideals)
      add(name, gm_ideal_closure(ring, doc.ideal_generators(ring, name), Flavor::GM, caps));
    scope = "pairs among zero, radical, whole and named ideals (order > 64)";
  }
  {
    auto& sec = r.section("iso ideals", {"label", "order", "generators"});
    for (const auto& [label, b] : ideals) sec.rows.push_back({label, b.order(), ring_members(ring, b.members().generators())});
  }
  std::map<std::string, Verdict> agg;
  std::vector<std::string> order;
  auto& sec = r.section("iso pairs", {"B", "C", "quotient", "first-iso", "second-iso", "third-iso", "correspondence"});
  for (const auto& [lb, b] : ideals)
    for (const auto& [lc, c] : ideals) {
      const auto rep = verify_iso_theorems(ring, b, c, nullptr, caps);
      std::map<std::string, std::string> st;
      for (const auto& v : rep.verdicts) {
        st[v.id] = to_string(v.status);
        auto [it, fresh] = agg.try_emplace(v.id, Verdict{v.id, v.claim, VerdictStatus::NotApplicable, "", ""});
        if (fresh) order.push_back(v.id);
        auto& a = it->second;
        if (v.status == VerdictStatus::Fail && a.status != VerdictStatus::Fail) {
          a.status = VerdictStatus::Fail;
          a.witness = "B=" + lb + " C=" + lc + ": " + v.witness;
        } else if (v.status == VerdictStatus::Pass && a.status == VerdictStatus::NotApplicable) {
          a.status = VerdictStatus::Pass;
        }
      }
      json row{lb, lc};
      for (const char* id : {"quotient", "first-iso", "second-iso", "third-iso", "correspondence"})
        row.push_back(st.count(id) ? json(st[id]) : json(nullptr));
      sec.rows.push_back(std::vector<json>(row.begin(), row.end()));
    }
  const std::size_t pairs = ideals.size() * ideals.size();
  for (const auto& id : order) {
    auto v = agg[id];
    v.detail = std::to_string(pairs) + " " + scope;
    r.verdicts.push_back(v);
  }
}

void cmd_verify(Report& r, const SpecDocument& doc, const GammaSystem& s, const Caps& caps, const std::string& suite) {
  if (suite != "iso" && suite != "radical" && suite != "all") invalid_input("E_OPTION", "unknown suite '" + suite + "'");
  const auto ring = GMRing::assemble(s, caps);
  if (suite != "iso") verify_radical(r, ring, caps);
  if (suite != "radical") verify_iso(r, doc, ring, caps);
}

}  // namespace

Report run_command(std::string_view spec_text, const std::string& spec_name, const CommandOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.command = describe(opts);
  r.spec_name = spec_name;
  r.digest = spec_digest(spec_text);
  try {
    auto doc = parse_spec(spec_text);
    r.input = doc.to_json();
    if (opts.max_order) doc.caps.max_order = *opts.max_order;
    if (opts.max_lattice) doc.caps.max_lattice = *opts.max_lattice;
    if (opts.max_radical) doc.caps.max_radical = *opts.max_radical;
    const auto system = doc.build();
    const auto& caps = doc.caps;
    if (opts.command == "check") cmd_check(r, system, caps);
    else if (opts.command == "radical") cmd_radical(r, system, caps, opts.method);
    else if (opts.command == "ideals") cmd_ideals(r, system, caps, opts.flavor);
    else if (opts.command == "quotient") cmd_quotient(r, doc, system, caps, opts.ideal);
    else if (opts.command == "components") cmd_components(r, system, caps);
    else if (opts.command == "verify") cmd_verify(r, doc, system, caps, opts.suite);
    else invalid_input("E_OPTION", "unknown command '" + opts.command + "'");
    if (any_failed(r)) r.outcome = Outcome::Violation;
  } catch (const Error& e) {
    r.outcome = static_cast<Outcome>(e.kind());
    r.error_code = e.code();
    r.error_message = e.what();
  }
  if (opts.timing)
    r.timing_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return r;
}

}  // namespace gmr
