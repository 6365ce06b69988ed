#include "siglat/corpus.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace siglat {

namespace {

void position_of(const std::string& text, size_t byte, int& line, int& col) {
  line = 1;
  col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
}

std::string cycle_n(int n) {
  std::string s = "(";
  for (int i = 1; i <= n; ++i) {
    if (i > 1) s += " ";
    s += std::to_string(i);
  }
  return s + ")";
}

GroupSpec cyclic(int n) {
  if (n == 1) return {"C1", 1, {"()"}};
  return {"C" + std::to_string(n), n, {cycle_n(n)}};
}

}  // namespace

GroupPtr GroupSpec::build(int order_cap) const {
  std::vector<Permutation> gens;
  for (const std::string& s : generators)
    gens.push_back(parse_cycles(s, degree));
  return Group::generate(degree, std::move(gens), name, order_cap);
}

GroupSpec parse_group_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 0, col = 0;
    position_of(text, e.byte ? e.byte - 1 : 0, line, col);
    throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
  }
  if (!j.is_object()) throw ParseError("group file must be a JSON object", 1, 1);
  if (!j.contains("name") || !j["name"].is_string())
    throw ParseError("missing string field \"name\"", 1, 1);
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    throw ParseError("missing integer field \"degree\"", 1, 1);
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError("missing array field \"generators\"", 1, 1);
  GroupSpec spec;
  spec.name = j["name"].get<std::string>();
  spec.degree = j["degree"].get<int>();
  if (spec.degree < 1) throw ParseError("degree must be positive", 1, 1);
  for (const auto& g : j["generators"]) {
    if (!g.is_string())
      throw ParseError("generators must be cycle-notation strings", 1, 1);
    spec.generators.push_back(g.get<std::string>());
  }
  for (const std::string& s : spec.generators)
    parse_cycles(s, spec.degree);  // validate now, with positions
  return spec;
}

GroupSpec parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file: " + path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_json(buf.str());
}

const std::vector<GroupSpec>& builtin_corpus() {
  static const std::vector<GroupSpec> corpus = [] {
    std::vector<GroupSpec> v;
    for (int n = 1; n <= 12; ++n) v.push_back(cyclic(n));
    v.push_back(cyclic(16));
    v.push_back(cyclic(24));
    v.push_back({"C2xC2", 4, {"(1 2)", "(3 4)"}});
    v.push_back({"C2xC4", 6, {"(1 2)", "(3 4 5 6)"}});
    v.push_back({"C2xC2xC2", 6, {"(1 2)", "(3 4)", "(5 6)"}});
    v.push_back({"S3", 3, {"(1 2)", "(1 2 3)"}});
    v.push_back({"D8", 4, {"(1 2 3 4)", "(1 3)"}});
    v.push_back({"Q8", 8, {"(1 3 2 4)(5 8 6 7)", "(1 5 2 6)(3 7 4 8)"}});
    v.push_back({"D10", 5, {"(1 2 3 4 5)", "(2 5)(3 4)"}});
    v.push_back({"D12", 6, {"(1 2 3 4 5 6)", "(2 6)(3 5)"}});
    v.push_back({"A4", 4, {"(1 2 3)", "(2 3 4)"}});
    v.push_back({"S4", 4, {"(1 2)", "(1 2 3 4)"}});
    v.push_back({"SL(2,3)", 8, {"(1 3 2 4)(5 8 6 7)", "(3 5 8)(4 6 7)"}});
    v.push_back({"Dic3", 7, {"(1 2 3)", "(2 3)(4 5 6 7)"}});
    v.push_back({"A5", 5, {"(1 2 3 4 5)", "(1 2 3)"}});
    v.push_back({"S5", 5, {"(1 2)", "(1 2 3 4 5)"}});
    v.push_back({"S3xS3", 6, {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"}});
    v.push_back({"S3xC4", 7, {"(1 2)", "(1 2 3)", "(4 5 6 7)"}});
    return v;
  }();
  return corpus;
}

}  // namespace siglat
