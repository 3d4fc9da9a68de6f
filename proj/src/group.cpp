#include "gainspec/group.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace gainspec {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Disjoint-cycle name of a permutation given in one-line form (0-based
// images); fixed points are omitted and the identity renders as "e".
std::string cycle_name(const std::vector<int>& p) {
  int n = int(p.size());
  std::vector<bool> seen(n, false);
  std::string out;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || p[s] == s) continue;
    out += '(';
    int x = s;
    do {
      seen[x] = true;
      out += char('1' + x);
      x = p[x];
    } while (x != s);
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// Parses disjoint-cycle notation with single-digit points into one-line form.
std::vector<int> parse_cycles(const std::string& lit, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> used(n, false);
  size_t i = 0;
  while (i < lit.size()) {
    if (lit[i] != '(')
      throw ParseError("bad element literal '" + lit + "': expected '('");
    ++i;
    std::vector<int> cyc;
    while (i < lit.size() && lit[i] != ')') {
      char c = lit[i];
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad element literal '" + lit + "': expected a digit");
      int v = c - '1';
      if (v < 0 || v >= n)
        throw ParseError("bad element literal '" + lit + "': point " +
                         std::string(1, c) + " out of range 1.." + std::to_string(n));
      if (used[v])
        throw ParseError("bad element literal '" + lit + "': point " +
                         std::string(1, c) + " repeated");
      used[v] = true;
      cyc.push_back(v);
      ++i;
    }
    if (i == lit.size())
      throw ParseError("bad element literal '" + lit + "': missing ')'");
    ++i;
    if (cyc.size() < 2)
      throw ParseError("bad element literal '" + lit + "': cycle of length " +
                       std::to_string(cyc.size()));
    for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return p;
}

// Rank of a permutation in lexicographic order of one-line forms.
int lex_rank(const std::vector<int>& p) {
  int n = int(p.size());
  int rank = 0;
  std::vector<int> fact(n + 1, 1);
  for (int i = 2; i <= n; ++i) fact[i] = fact[i - 1] * i;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    rank += smaller * fact[n - 1 - i];
  }
  return rank;
}

}  // namespace

FiniteGroup::FiniteGroup(GroupKind kind, int kind_param,
                         std::vector<std::vector<int>> table,
                         std::vector<std::string> names, TableCheck check)
    : kind_(kind), kind_param_(kind_param) {
  order_ = int(table.size());
  if (order_ == 0) throw NotAGroupError("empty multiplication table");
  mul_.resize(size_t(order_) * order_);
  for (int a = 0; a < order_; ++a) {
    if (int(table[a].size()) != order_)
      throw NotAGroupError("row " + std::to_string(a) + " of the table has " +
                           std::to_string(table[a].size()) + " entries, expected " +
                           std::to_string(order_));
    for (int b = 0; b < order_; ++b) {
      int v = table[a][b];
      if (v < 0 || v >= order_)
        throw NotAGroupError("table entry (" + std::to_string(a) + "," +
                             std::to_string(b) + ") = " + std::to_string(v) +
                             " is out of range");
      mul_[size_t(a) * order_ + b] = v;
    }
  }
  compute_identity_and_inverses(check);
  if (names.empty()) {
    names_.reserve(order_);
    for (int a = 0; a < order_; ++a) names_.push_back("#" + std::to_string(a));
  } else {
    if (int(names.size()) != order_)
      throw NotAGroupError("got " + std::to_string(names.size()) + " element names for " +
                           std::to_string(order_) + " elements");
    names_ = std::move(names);
  }
  compute_classes();
}

void FiniteGroup::compute_identity_and_inverses(TableCheck check) {
  identity_ = -1;
  for (int e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int b = 0; b < order_ && ok; ++b)
      ok = mul(e, b) == b && mul(b, e) == b;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw NotAGroupError("table has no identity element");

  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_ && mul(b, a) == identity_) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0)
      throw NotAGroupError("element " + std::to_string(a) + " has no inverse");
  }

  if (check == TableCheck::full) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw NotAGroupError("associativity fails at (" + std::to_string(a) +
                                 "," + std::to_string(b) + "," + std::to_string(c) +
                                 "): (ab)c = " + std::to_string(mul(mul(a, b), c)) +
                                 " but a(bc) = " + std::to_string(mul(a, mul(b, c))));
  }

  abelian_ = true;
  for (int a = 0; a < order_ && abelian_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
}

void FiniteGroup::compute_classes() {
  class_of_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    if (class_of_[a] >= 0) continue;
    int id = int(classes_.size());
    std::vector<int> cls;
    for (int x = 0; x < order_; ++x) {
      int c = conjugate(a, x);
      if (class_of_[c] < 0) {
        class_of_[c] = id;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
}

int FiniteGroup::power(int a, long long k) const {
  if (k < 0) return power(inv_[a], -k);
  int r = identity_;
  long long e = k % element_order(a);
  for (long long i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int r = a, o = 1;
  while (r != identity_) {
    r = mul(r, a);
    ++o;
  }
  return o;
}

std::optional<int> FiniteGroup::find_element(const std::string& name) const {
  for (int a = 0; a < order_; ++a)
    if (names_[a] == name) return a;
  return std::nullopt;
}

int FiniteGroup::parse_element(const std::string& literal) const {
  std::string lit = trim(literal);
  if (lit.empty()) throw ParseError("empty element literal");
  switch (kind_) {
    case GroupKind::cyclic: {
      if (lit == "e") return identity_;
      if (lit == "g") {
        if (order_ < 2) throw ParseError("'g' is not an element of the trivial group");
        return 1;
      }
      if (lit.rfind("g^", 0) == 0) {
        std::string ks = lit.substr(2);
        size_t pos = 0;
        int k = -1;
        try {
          k = std::stoi(ks, &pos);
        } catch (...) {
          throw ParseError("bad element literal '" + lit + "'");
        }
        if (pos != ks.size() || k < 0 || k >= order_)
          throw ParseError("bad element literal '" + lit + "': exponent must be in 0.." +
                           std::to_string(order_ - 1));
        return k;
      }
      throw ParseError("bad element literal '" + lit +
                       "' for a cyclic group (use e or g^<k>)");
    }
    case GroupKind::symmetric: {
      if (lit == "e") return identity_;
      return lex_rank(parse_cycles(lit, kind_param_));
    }
    case GroupKind::table: {
      if (std::optional<int> byname = find_element(lit)) return *byname;
      if (lit.size() < 2 || lit[0] != '#')
        throw ParseError("bad element literal '" + lit +
                         "' for a table group (use a declared name or #<index>)");
      std::string ks = lit.substr(1);
      size_t pos = 0;
      int k = -1;
      try {
        k = std::stoi(ks, &pos);
      } catch (...) {
        throw ParseError("bad element literal '" + lit + "'");
      }
      if (pos != ks.size() || k < 0 || k >= order_)
        throw ParseError("element index " + lit + " out of range 0.." +
                         std::to_string(order_ - 1));
      return k;
    }
  }
  throw ParseError("bad element literal '" + lit + "'");
}

GroupPtr build_cyclic(int m) {
  if (m < 1) throw Error("cyclic group order must be >= 1, got " + std::to_string(m));
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = (a + b) % m;
  std::vector<std::string> names;
  names.reserve(m);
  for (int a = 0; a < m; ++a)
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  return std::make_shared<FiniteGroup>(GroupKind::cyclic, m, std::move(table),
                                       std::move(names), TableCheck::skip_associativity);
}

GroupPtr build_symmetric(int n) {
  if (n < 1 || n > 8)
    throw Error("symmetric group degree must be in 1..8, got " + std::to_string(n));
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int N = int(perms.size());
  std::vector<std::string> names;
  names.reserve(N);
  for (const auto& q : perms) names.push_back(cycle_name(q));
  std::vector<std::vector<int>> table(N, std::vector<int>(N));
  std::vector<int> c(n);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      // compose left to right: apply a first, then b
      for (int x = 0; x < n; ++x) c[x] = perms[b][perms[a][x]];
      table[a][b] = lex_rank(c);
    }
  }
  return std::make_shared<FiniteGroup>(GroupKind::symmetric, n, std::move(table),
                                       std::move(names), TableCheck::skip_associativity);
}

GroupPtr build_from_table(const std::vector<std::vector<int>>& table,
                          std::vector<std::string> names,
                          bool skip_associativity_for_large) {
  TableCheck check = TableCheck::full;
  if (skip_associativity_for_large && table.size() > 256)
    check = TableCheck::skip_associativity;
  return std::make_shared<FiniteGroup>(GroupKind::table, 0, table, std::move(names), check);
}

GroupPtr parse_group_table(std::istream& in) {
  // Tokenize, dropping #-comments.
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tokens.push_back(t);
  }
  size_t pos = 0;
  auto next_int = [&](const char* what) {
    if (pos >= tokens.size())
      throw ParseError(std::string("group table ended early, expected ") + what);
    try {
      size_t used = 0;
      int v = std::stoi(tokens[pos], &used);
      if (used != tokens[pos].size()) throw std::invalid_argument("");
      ++pos;
      return v;
    } catch (...) {
      throw ParseError("group table: expected " + std::string(what) + ", got '" +
                       tokens[pos] + "'");
    }
  };
  int n = next_int("the order");
  if (n < 1) throw ParseError("group table: order must be >= 1");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = next_int("a table entry");
  std::vector<std::string> names;
  if (pos < tokens.size()) {
    if (tokens.size() - pos != size_t(n))
      throw ParseError("group table: expected " + std::to_string(n) + " names, got " +
                       std::to_string(tokens.size() - pos));
    names.assign(tokens.begin() + pos, tokens.end());
  }
  return build_from_table(table, std::move(names));
}

GroupPtr load_group_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group table file '" + path + "'");
  return parse_group_table(in);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  if (&a == &b) return true;
  if (a.order() != b.order()) return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.mul(x, y) != b.mul(x, y)) return false;
  return true;
}

bool is_ambivalent(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a)
    if (g.class_of(g.inv(a)) != g.class_of(a)) return false;
  return true;
}

std::optional<int> simultaneously_conjugate(const FiniteGroup& g,
                                            const std::vector<int>& a,
                                            const std::vector<int>& b) {
  if (a.size() != b.size())
    throw Error("simultaneous conjugation needs tuples of equal length");
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) ok = g.conjugate(a[i], x) == b[i];
    if (ok) return x;
  }
  return std::nullopt;
}

Int count_simultaneous_conjugacy_classes(const FiniteGroup& g, int k) {
  if (k < 0) throw Error("tuple length must be >= 0");
  Int sum = 0;
  for (int a = 0; a < g.order(); ++a)
    sum += boost::multiprecision::pow(Int(g.centralizer_size(a)), unsigned(k));
  if (sum % g.order() != 0)
    throw Error("internal error: Burnside sum not divisible by the group order");
  return sum / g.order();
}

}  // namespace gainspec
