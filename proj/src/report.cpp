#include "siglat/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace siglat {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json check_to_json(const Check& c) {
  ordered_json j;
  j["holds"] = c.holds;
  j["checked"] = c.checked;
  j["witness"] = c.witness;
  return j;
}

Check check_from_json(const ordered_json& j) {
  Check c;
  c.holds = j.at("holds").get<bool>();
  c.checked = j.at("checked").get<long>();
  c.witness = j.at("witness").get<std::string>();
  return c;
}

ordered_json lattice_to_json(const LatticeInfo& l) {
  ordered_json j;
  j["size"] = l.size;
  j["distributive"] = l.distributive;
  j["distributive_witness"] = l.distributive_witness;
  j["modular"] = l.modular;
  j["modular_witness"] = l.modular_witness;
  j["has_diamond"] = l.has_diamond;
  j["has_pentagon"] = l.has_pentagon;
  j["laws_consistent"] = l.laws_consistent;
  return j;
}

LatticeInfo lattice_from_json(const ordered_json& j) {
  LatticeInfo l;
  l.size = j.at("size").get<int>();
  l.distributive = j.at("distributive").get<bool>();
  l.distributive_witness = j.at("distributive_witness").get<std::string>();
  l.modular = j.at("modular").get<bool>();
  l.modular_witness = j.at("modular_witness").get<std::string>();
  l.has_diamond = j.at("has_diamond").get<bool>();
  l.has_pentagon = j.at("has_pentagon").get<bool>();
  l.laws_consistent = j.at("laws_consistent").get<bool>();
  return l;
}

}  // namespace

std::string report_to_json(const PairReport& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = r.group;
  j["order"] = r.group_order;
  j["degree"] = r.degree;
  j["partition"] = r.partition;
  j["sigma_full"] = r.sigma_full;
  j["cap_skips"] = r.cap_skips;
  j["full_lattice"] = lattice_to_json(r.full_lattice);
  if (r.sigma_full) {
    j["sperm_count"] = r.sperm_count;
    j["sperm_orders"] = r.sperm_orders;
    j["lattice"] = lattice_to_json(r.lattice);
    ordered_json a;
    a["direct_distributive"] = r.theorem_a.direct_distributive;
    a["direct_witness"] = r.theorem_a.direct_witness;
    a["cond_i"] = check_to_json(r.theorem_a.cond_i);
    a["cond_ii"] = check_to_json(r.theorem_a.cond_ii);
    a["cond_iii"] = check_to_json(r.theorem_a.cond_iii);
    a["cond_iv_full"] = check_to_json(r.theorem_a.cond_iv_full);
    a["cond_iv_covers"] = check_to_json(r.theorem_a.cond_iv_covers);
    a["verdict"] = r.theorem_a.consistent() ? "consistent" : "VIOLATION";
    a["sufficiency_ok"] = r.theorem_a.sufficiency_ok();
    j["theorem_a"] = std::move(a);
    j["theorem_b"] = check_to_json(r.theorem_b);
    j["theorem_c"] = check_to_json(r.theorem_c);
    ordered_json lemmas = ordered_json::array();
    for (const auto& lc : r.lemmas) {
      ordered_json e;
      e["id"] = lc.id;
      e["holds"] = lc.check.holds;
      e["checked"] = lc.check.checked;
      e["witness"] = lc.check.witness;
      lemmas.push_back(std::move(e));
    }
    j["lemmas"] = std::move(lemmas);
  }
  j["violations"] = r.violations;
  return j.dump(2) + "\n";
}

PairReport report_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  if (j.at("schema_version").get<int>() != kSchemaVersion)
    throw ParseError("unsupported schema_version", 0, 0);
  PairReport r;
  r.group = j.at("group").get<std::string>();
  r.group_order = j.at("order").get<int>();
  r.degree = j.at("degree").get<int>();
  r.partition = j.at("partition").get<std::string>();
  r.sigma_full = j.at("sigma_full").get<bool>();
  r.cap_skips = j.at("cap_skips").get<int>();
  r.full_lattice = lattice_from_json(j.at("full_lattice"));
  if (r.sigma_full) {
    r.sperm_count = j.at("sperm_count").get<int>();
    r.sperm_orders = j.at("sperm_orders").get<std::vector<int>>();
    r.lattice = lattice_from_json(j.at("lattice"));
    const auto& a = j.at("theorem_a");
    r.theorem_a.direct_distributive = a.at("direct_distributive").get<bool>();
    r.theorem_a.direct_witness = a.at("direct_witness").get<std::string>();
    r.theorem_a.cond_i = check_from_json(a.at("cond_i"));
    r.theorem_a.cond_ii = check_from_json(a.at("cond_ii"));
    r.theorem_a.cond_iii = check_from_json(a.at("cond_iii"));
    r.theorem_a.cond_iv_full = check_from_json(a.at("cond_iv_full"));
    r.theorem_a.cond_iv_covers = check_from_json(a.at("cond_iv_covers"));
    r.theorem_b = check_from_json(j.at("theorem_b"));
    r.theorem_c = check_from_json(j.at("theorem_c"));
    for (const auto& e : j.at("lemmas")) {
      LemmaCheck lc;
      lc.id = e.at("id").get<std::string>();
      lc.check.holds = e.at("holds").get<bool>();
      lc.check.checked = e.at("checked").get<long>();
      lc.check.witness = e.at("witness").get<std::string>();
      r.lemmas.push_back(std::move(lc));
    }
  }
  r.violations = j.at("violations").get<std::vector<std::string>>();
  return r;
}

std::string reports_to_markdown(const std::vector<PairReport>& reports,
                                long duration_ms) {
  std::ostringstream out;
  out << "# Sigma-permutable lattice sweep\n\n";
  out << "| group | order | partition | sigma-full | lattice | distributive "
         "| modular | verdict | violations |\n";
  out << "|---|---|---|---|---|---|---|---|---|\n";
  int violations = 0;
  for (const auto& r : reports) {
    violations += int(r.violations.size());
    out << "| " << r.group << " | " << r.group_order << " | " << r.partition
        << " | " << (r.sigma_full ? "yes" : "no") << " | ";
    if (r.sigma_full) {
      out << r.lattice.size << " | " << (r.lattice.distributive ? "yes" : "no")
          << " | " << (r.lattice.modular ? "yes" : "no") << " | "
          << (r.theorem_a.consistent() ? "consistent" : "VIOLATION");
    } else {
      out << "- | - | - | skipped";
    }
    out << " | " << r.violations.size() << " |\n";
  }
  out << "\nPairs: " << reports.size() << ", violations: " << violations
      << ", capped skips: " << total_cap_skips(reports) << "\n";
  if (duration_ms >= 0) out << "Wall clock: " << duration_ms << " ms\n";
  return out.str();
}

std::vector<PairReport> run_sweep(const std::vector<GroupSpec>& corpus,
                                  const std::vector<PrimePartition>& partitions,
                                  const Caps& caps, int jobs) {
  std::vector<PairReport> out(corpus.size() * partitions.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t gi = next.fetch_add(1);
      if (gi >= corpus.size()) return;
      try {
        GroupPtr g = corpus[gi].build(caps.max_order);
        GroupWork gw = GroupWork::build(g, caps);
        for (size_t pi = 0; pi < partitions.size(); ++pi)
          out[gi * partitions.size() + pi] = analyze_pair(gw, partitions[pi]);
      } catch (...) {
        errors[gi] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::sort(out.begin(), out.end(),
            [](const PairReport& a, const PairReport& b) {
              return std::tie(a.group, a.partition) <
                     std::tie(b.group, b.partition);
            });
  return out;
}

std::vector<ModularityFinding> hunt_modularity(
    const std::vector<PairReport>& reports) {
  std::vector<ModularityFinding> out;
  for (const auto& r : reports) {
    if (!r.sigma_full) continue;
    out.push_back(
        {r.group, r.partition, r.lattice.modular, r.lattice.modular_witness});
  }
  return out;
}

std::string findings_to_json(const std::vector<ModularityFinding>& findings) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  ordered_json arr = ordered_json::array();
  for (const auto& f : findings) {
    ordered_json e;
    e["group"] = f.group;
    e["partition"] = f.partition;
    e["modular"] = f.modular;
    e["witness"] = f.witness;
    arr.push_back(std::move(e));
  }
  j["findings"] = std::move(arr);
  return j.dump(2) + "\n";
}

int total_violations(const std::vector<PairReport>& reports) {
  int n = 0;
  for (const auto& r : reports) n += int(r.violations.size());
  return n;
}

int total_cap_skips(const std::vector<PairReport>& reports) {
  int n = 0;
  for (const auto& r : reports) n += r.cap_skips;
  return n;
}

}  // namespace siglat
