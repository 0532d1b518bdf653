#include "moduli/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace moduli {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<int> v(degree);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(degree);
  std::iota(v.begin(), v.end(), 0);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int from = c[i] - 1;
      const int to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || static_cast<std::size_t>(from) >= degree || used[static_cast<std::size_t>(from)])
        throw std::invalid_argument("cycles must be disjoint and within the degree");
      used[static_cast<std::size_t>(from)] = true;
      v[static_cast<std::size_t>(from)] = to;
    }
  }
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(v));
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

int Perm::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("permutations of different degree");
  std::vector<int> v(q.degree());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  Perm r;
  r.images_ = std::move(v);
  return r;
}

Perm Perm::pow(long k) const {
  const long o = order();
  long e = ((k % o) + o) % o;
  Perm r = identity(degree());
  for (long i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string to_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(static_cast<int>(i)) == static_cast<int>(i)) continue;
    out += "(";
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p(static_cast<int>(j)))) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<Perm> generated_subgroup(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier)
      for (const auto& h : gens) {
        Perm c = g * h;
        if (seen.insert(c).second) next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> symmetric_group(std::size_t degree) {
  std::vector<int> v(degree);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

class WordParser {
 public:
  explicit WordParser(const std::string& text) : text_(text) {}

  Word parse() {
    Word w = sequence();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  Word sequence() {
    Word w;
    for (;;) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] == ')') return w;
      Word item;
      if (text_[pos_] == '(') {
        ++pos_;
        item = sequence();
        skip();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
        ++pos_;
      } else if (std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0) {
        item.push_back({std::string(1, text_[pos_]), 1});
        ++pos_;
      } else {
        fail("expected a letter or '('");
      }
      const long e = exponent();
      append_power(w, item, e);
    }
  }

  long exponent() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (start == pos_) fail("expected an exponent");
    const long v = std::stol(text_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  static void append_power(Word& out, const Word& item, long e) {
    if (e >= 0) {
      for (long i = 0; i < e; ++i) out.insert(out.end(), item.begin(), item.end());
      return;
    }
    Word inv;
    for (auto it = item.rbegin(); it != item.rend(); ++it) inv.push_back({it->name, -it->exponent});
    for (long i = 0; i < -e; ++i) out.insert(out.end(), inv.begin(), inv.end());
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("word '" + text_ + "': " + why + " at position " + std::to_string(pos_));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text) { return WordParser(text).parse(); }

Perm perm_word_eval(const Word& word, const std::map<std::string, Perm>& assignment, std::size_t degree) {
  Perm r = Perm::identity(degree);
  for (const auto& letter : word) {
    auto it = assignment.find(letter.name);
    if (it == assignment.end()) throw std::invalid_argument("unbound generator '" + letter.name + "'");
    r = r * it->second.pow(letter.exponent);
  }
  return r;
}

}  // namespace moduli
