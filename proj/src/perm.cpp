#include "siglat/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "siglat/errors.hpp"

namespace siglat {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= int(img_.size()) || seen[v])
      throw InvalidPermutation("image array is not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& o) const {
  std::vector<int> img(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) img[x] = o.img_[img_[x]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(img_.size());
  for (size_t x = 0; x < img_.size(); ++x) img[img_[x]] = int(x);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (size_t x = 0; x < img_.size(); ++x)
    if (img_[x] != int(x)) return false;
  return true;
}

int Permutation::order() const {
  Permutation p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(uint8_t(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size())
    throw ParseError("empty permutation string", 1, int(i) + 1);

  bool saw_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle notation", 1, int(i) + 1);
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_ws();
      if (i == text.size())
        throw ParseError("unterminated cycle", 1, int(i) + 1);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(uint8_t(text[i])))
        throw ParseError("expected point or ')'", 1, int(i) + 1);
      int v = 0;
      while (i < text.size() && std::isdigit(uint8_t(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                             std::to_string(degree),
                         1, int(i));
      cycle.push_back(v - 1);
    }
    saw_cycle = true;
    for (size_t k = 0; k + 1 < cycle.size(); ++k)
      for (size_t l = k + 1; l < cycle.size(); ++l)
        if (cycle[k] == cycle[l])
          throw ParseError("repeated point in cycle", 1, int(i));
    for (size_t k = 0; k < cycle.size(); ++k) {
      if (img[cycle[k]] != cycle[k])
        throw ParseError("point appears in two cycles", 1, int(i));
    }
    for (size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  if (!saw_cycle)
    throw ParseError("no cycles found", 1, int(i) + 1);
  return Permutation(std::move(img));
}

std::string to_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.degree(), 0);
  for (int x = 0; x < p.degree(); ++x) {
    if (done[x] || p.apply(x) == x) {
      done[x] = 1;
      continue;
    }
    out += '(';
    int y = x;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      done[y] = 1;
      y = p.apply(y);
      first = false;
    } while (y != x);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace siglat
