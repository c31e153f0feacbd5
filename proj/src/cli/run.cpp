#include <chrono>
#include <functional>

#include "pq/cli.hpp"

namespace pq::cli {

namespace {

constexpr std::size_t kListedVectors = 50;

json big(const BigInt& v) {
  if (v >= -BigInt(1LL << 53) && v <= BigInt(1LL << 53))
    return static_cast<long long>(v);
  return v.str();
}

json invariants_json(const AbelianInvariants& a) {
  json torsion = json::array();
  for (const auto& t : a.torsion)
    torsion.push_back(big(t));
  return {{"free_rank", a.free_rank}, {"torsion", torsion}, {"text", a.to_string()}};
}

json presentation_json(const Presentation& p) {
  json rel = json::array();
  for (const auto& r : p.relators())
    rel.push_back(p.format(r));
  return {{"generators", p.names()}, {"relators", rel}};
}

std::string kill_key(std::size_t idx) { return "c" + std::to_string(idx + 1); }

}  // namespace

RunResult run_job(const JobSpec& job, bool timing) {
  RunResult out;
  json& r = out.report;
  r["schema"] = kReportSchema;
  r["job"] = emit_job(job);
  const GroupPtr& g = job.group;
  Presentation g_words(job.names);
  auto word_of = [&](const FiniteGroup& h, Element e) { return g_words.format(element_word(h, e)); };

  r["group"] = {{"order", g->order()}};
  json warnings = json::array();
  json actions = json::array();
  for (std::size_t i = 0; i < job.curve_actions.size(); ++i) {
    const auto& a = job.curve_actions[i];
    actions.push_back({{"signature", a.signature().to_string()},
                       {"genus", a.genus},
                       {"target_order", a.target()->order()},
                       {"kernel_order", a.kernel.order()},
                       {"hyperbolic", a.signature().is_hyperbolic()}});
    if (!a.signature().is_hyperbolic())
      warnings.push_back("action " + std::to_string(i) + ": signature " +
                         a.signature().to_string() + " is not hyperbolic");
  }
  r["actions"] = std::move(actions);

  json overflow = json::array();
  json errors = json::array();
  json times = json::object();
  bool consistency = false;

  // Runs one stage, turning budget and consistency failures into report
  // entries instead of aborting the rest.
  auto stage = [&](const std::string& name, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const CosetOverflow& e) {
      overflow.push_back(name + ": " + e.what());
      r[name] = "overflow";
    } catch (const BoundExceeded& e) {
      overflow.push_back(name + ": " + e.what());
      r[name] = "overflow";
    } catch (const Error& e) {
      consistency = true;
      errors.push_back(name + ": " + e.what());
      r[name] = "error";
    }
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    times[name] = ms.count();
  };

  ProductQuotient pq(g, job.names, job.curve_actions, job.budgets);
  const auto& outs = job.outputs;

  if (outs.contains("freeness"))
    stage("freeness", [&] {
      auto f = freeness_check(job.curve_actions);
      r["freeness"] = {{"free", f.free},
                       {"witness", f.witness ? json(word_of(*g, *f.witness)) : json(nullptr)}};
    });

  if (outs.contains("pi1"))
    stage("pi1", [&] {
      const auto& tor = pq.torsion();
      json per = json::array();
      for (const auto& list : tor.per_factor)
        per.push_back(list.size());
      json sigmas = json::array();
      for (const auto& s : pq.sigmas())
        sigmas.push_back({{"index", s.index()},
                          {"generators", s.presentation().num_generators()},
                          {"relators", s.presentation().relators().size()}});
      const auto& gt = pq.gtilde();
      json p = presentation_json(pq.pi1().presentation());
      p["sigma"] = std::move(sigmas);
      p["gtilde"] = {{"index", gt.index()},
                     {"generators", gt.presentation().num_generators()},
                     {"relators", gt.presentation().relators().size()}};
      p["torsion"] = {{"per_factor", per},
                      {"pure_kernel", tor.pure_kernel.size()},
                      {"total", tor.all.size()}};
      r["pi1"] = std::move(p);
    });

  if (outs.contains("abelianization"))
    stage("abelianization", [&] { r["abelianization"] = invariants_json(pq.abelianization()); });

  if (outs.contains("structure"))
    stage("structure", [&] {
      StructureReport s = pq.structure();
      json sigs = json::array();
      for (const auto& q : s.quotient_signatures)
        sigs.push_back(q.to_string());
      json kills = json::array();
      for (std::size_t i = 0; i < s.kill.size(); ++i) {
        json k = json::object();
        for (const auto& [idx, list] : s.kill[i])
          k[kill_key(idx)] = list;
        kills.push_back(std::move(k));
      }
      json l = json::array();
      for (const auto& x : s.l_closure_orders)
        l.push_back(x ? big(*x) : json("unbounded-within-budget"));
      const auto& v = s.verification;
      r["structure"] = {
          {"quotient_signatures", sigs},
          {"kill_maps", kills},
          {"t_index", s.t_index ? json(*s.t_index) : json("overflow")},
          {"t_index_bound", s.t_index_bound},
          {"l_closure_orders", l},
          {"e_order_bound", s.e_order_bound ? big(*s.e_order_bound) : json("unbounded-within-budget")},
          {"freeness", s.freeness.free},
          {"abelianization", invariants_json(s.abelianization)},
          {"verification", VerificationReport::name(v.outcome)},
      };
      for (const auto& o : s.overflow)
        overflow.push_back("structure: " + o);
      if (v.budget_exhausted)
        overflow.push_back("structure: verification ran out of cosets");
    });

  if (outs.contains("verify"))
    stage("verify", [&] {
      auto v = pq.verify();
      json x = {{"outcome", VerificationReport::name(v.outcome)},
                {"candidates_tried", v.candidates_tried},
                {"index_bound", job.budgets.index_bound}};
      if (v.outcome == VerificationReport::Outcome::Found) {
        x["index"] = v.index;
        x["genera"] = v.genera;
        x["free_rank"] = v.free_rank;
        x["subgroup"] = v.subgroup;
      }
      if (v.order)
        x["order"] = big(*v.order);
      if (!v.detail.empty())
        x["detail"] = v.detail;
      if (v.budget_exhausted)
        overflow.push_back("verify: some candidates ran out of cosets");
      r["verify"] = std::move(x);
    });

  if (outs.contains("enumerate"))
    stage("enumerate", [&] {
      json list = json::array();
      for (const auto& a : job.curve_actions) {
        auto vs = enumerate_generating_vectors(a.target(), a.signature());
        json shown = json::array();
        for (std::size_t k = 0; k < vs.size() && k < kListedVectors; ++k) {
          auto words = [&](const std::vector<Element>& es) {
            json w = json::array();
            for (Element e : es)
              w.push_back(word_of(*a.target(), e));
            return w;
          };
          shown.push_back({{"a", words(vs[k].a)}, {"b", words(vs[k].b)}, {"c", words(vs[k].c)}});
        }
        list.push_back({{"signature", a.signature().to_string()},
                        {"target_order", a.target()->order()},
                        {"count", vs.size()},
                        {"vectors", shown},
                        {"truncated", vs.size() > kListedVectors}});
      }
      r["enumerate"] = std::move(list);
    });

  r["warnings"] = std::move(warnings);
  r["overflow"] = std::move(overflow);
  r["errors"] = std::move(errors);
  if (timing)
    r["timing_ms"] = std::move(times);
  if (consistency)
    out.exit_code = kExitConsistency;
  else if (!r["overflow"].empty())
    out.exit_code = kExitOverflow;
  return out;
}

}  // namespace pq::cli
