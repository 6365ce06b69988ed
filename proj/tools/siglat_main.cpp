#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "siglat/report.hpp"

namespace {

using namespace siglat;

constexpr const char* kDefaultPartitions[] = {
    "sigma0", "pi:2", "pi:2,3", "blocks:[2,5][3];rest=singletons"};

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
            c == '-')
               ? c
               : '_';
  return out;
}

std::vector<PrimePartition> parse_partition_list(const std::string& list) {
  // Partition specs themselves contain commas, so the list separator is ';;'
  // when any spec needs a comma-free boundary; a plain comma splits specs
  // that parse on their own, scanning greedily.
  std::vector<PrimePartition> out;
  std::vector<std::string> texts;
  if (list.find(";;") != std::string::npos) {
    size_t pos = 0;
    while (pos <= list.size()) {
      size_t cut = list.find(";;", pos);
      if (cut == std::string::npos) cut = list.size();
      texts.push_back(list.substr(pos, cut - pos));
      pos = cut + 2;
    }
  } else {
    // Greedy scan: extend each candidate over following comma-separated
    // tokens while the extension still parses.
    std::vector<std::string> tokens;
    size_t pos = 0;
    while (pos <= list.size()) {
      size_t cut = list.find(',', pos);
      if (cut == std::string::npos) cut = list.size();
      tokens.push_back(list.substr(pos, cut - pos));
      pos = cut + 1;
    }
    auto parses = [](const std::string& t) {
      try {
        parse_partition(t);
        return true;
      } catch (const ParseError&) {
        return false;
      }
    };
    for (size_t i = 0; i < tokens.size(); ++i) {
      std::string cand = tokens[i];
      while (i + 1 < tokens.size() && parses(cand + "," + tokens[i + 1])) {
        cand += "," + tokens[++i];
      }
      texts.push_back(cand);
    }
  }
  for (const auto& t : texts) out.push_back(parse_partition(t));
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

int finish(const std::vector<PairReport>& reports, bool strict) {
  if (total_violations(reports) > 0) return 1;
  if (total_cap_skips(reports) > 0 && strict) return 3;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sigma-permutable subgroup lattice analyzer"};
  app.require_subcommand(1);

  Caps caps;
  if (const char* env = std::getenv("SIGLAT_MAX_ORDER"))
    caps.max_order = std::atoi(env);
  bool strict = false;
  app.add_option("--max-order", caps.max_order, "group order cap");
  app.add_option("--max-subgroups", caps.max_subgroups, "subgroup count cap");
  app.add_flag("--strict", strict, "exit 3 when caps forced any skip");

  std::string group_file, partition_text = "sigma0", mode = "full";
  std::string out_dir, format = "json";
  auto* analyze = app.add_subcommand("analyze", "analyze one group");
  analyze->add_option("--group", group_file, "group JSON file")->required();
  analyze->add_option("--partition", partition_text, "partition spec");
  analyze->add_option("--mode", mode, "condition (iv) quantifier mode")
      ->check(CLI::IsMember({"full", "covers"}));
  analyze->add_option("--out", out_dir, "output directory");
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "md"}));

  std::string partitions_list;
  for (const char* p : kDefaultPartitions) {
    if (!partitions_list.empty()) partitions_list += ";;";
    partitions_list += p;
  }
  int jobs = 1;
  auto* corpus_cmd = app.add_subcommand("corpus", "sweep the builtin corpus");
  corpus_cmd->add_option("--partitions", partitions_list, "partition specs");
  corpus_cmd->add_option("--jobs", jobs, "worker threads");
  corpus_cmd->add_option("--out", out_dir, "output directory");

  auto* verify = app.add_subcommand("verify", "theorem and lemma suites");
  verify->add_option("--partitions", partitions_list, "partition specs");
  verify->add_option("--jobs", jobs, "worker threads");

  auto* hunt = app.add_subcommand("hunt", "modularity survey");
  hunt->add_option("--partitions", partitions_list, "partition specs");
  hunt->add_option("--jobs", jobs, "worker threads");
  hunt->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) {
      GroupSpec spec = parse_group_file(group_file);
      PrimePartition sigma = parse_partition(partition_text);
      GroupWork gw = GroupWork::build(spec.build(caps.max_order), caps);
      PairReport r = analyze_pair(gw, sigma);
      std::string text = format == "json" ? report_to_json(r)
                                          : reports_to_markdown({r});
      if (out_dir.empty()) {
        std::cout << text;
      } else {
        std::filesystem::create_directories(out_dir);
        std::string ext = format == "json" ? ".json" : ".md";
        write_file(std::filesystem::path(out_dir) /
                       (sanitize(r.group) + "_" + sanitize(r.partition) + ext),
                   text);
      }
      const Check& iv = mode == "covers" ? r.theorem_a.cond_iv_covers
                                         : r.theorem_a.cond_iv_full;
      std::cerr << "cond_iv (" << mode << "): "
                << (iv.holds ? "holds" : "fails") << "\n";
      return finish({r}, strict);
    }

    std::vector<PrimePartition> partitions =
        parse_partition_list(partitions_list);

    if (corpus_cmd->parsed() || verify->parsed()) {
      auto t0 = std::chrono::steady_clock::now();
      std::vector<PairReport> reports =
          run_sweep(builtin_corpus(), partitions, caps, jobs);
      long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      if (corpus_cmd->parsed() && !out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& r : reports)
          write_file(std::filesystem::path(out_dir) /
                         (sanitize(r.group) + "_" + sanitize(r.partition) +
                          ".json"),
                     report_to_json(r));
        write_file(std::filesystem::path(out_dir) / "summary.md",
                   reports_to_markdown(reports));
      }
      std::cout << "pairs: " << reports.size()
                << ", violations: " << total_violations(reports)
                << ", capped skips: " << total_cap_skips(reports)
                << ", wall clock: " << ms << " ms\n";
      for (const auto& r : reports)
        for (const auto& v : r.violations)
          std::cout << "VIOLATION " << r.group << " " << r.partition << ": "
                    << v << "\n";
      if (verify->parsed()) {
        if (total_violations(reports) > 0) return 1;
        return total_cap_skips(reports) > 0 ? 3 : 0;
      }
      return finish(reports, strict);
    }

    if (hunt->parsed()) {
      std::vector<PairReport> reports =
          run_sweep(builtin_corpus(), partitions, caps, jobs);
      std::string text = findings_to_json(hunt_modularity(reports));
      if (out_dir.empty()) {
        std::cout << text;
      } else {
        std::filesystem::create_directories(out_dir);
        write_file(std::filesystem::path(out_dir) / "modularity.json", text);
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const OrderCapExceeded& e) {
    std::cerr << "order cap exceeded: " << e.what() << "\n";
    return strict ? 3 : 0;
  } catch (const SubgroupCountCapExceeded& e) {
    std::cerr << "subgroup cap exceeded: " << e.what() << "\n";
    return strict ? 3 : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
