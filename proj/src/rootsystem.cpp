#include "nash/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "nash/error.hpp"

namespace nash {

void CartanType::validate() const {
  const std::string n = name();
  if (rank < 1 || rank > kMaxRank) {
    throw Error("unsupported Cartan type " + n + ": rank must be in 1.." + std::to_string(kMaxRank));
  }
  switch (family) {
    case Family::A:
      return;
    case Family::B:
    case Family::C:
      if (rank < 2) throw Error("unsupported Cartan type " + n + ": B/C need rank >= 2");
      return;
    case Family::D:
      if (rank < 3) throw Error("unsupported Cartan type " + n + ": D needs rank >= 3");
      return;
    case Family::E:
      if (rank != 6 && rank != 7) {
        throw Error("unsupported Cartan type " + n + ": only E6 and E7 carry cominuscule nodes");
      }
      return;
  }
  throw Error("unsupported Cartan family");
}

std::string CartanType::name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

CartanType CartanType::parse(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.size() < 2) throw Error("cannot parse Cartan type '" + text + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f == 'F' || f == 'G') {
    throw Error("Cartan type " + s + " is not supported: it has no cominuscule node");
  }
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D' && f != 'E') {
    throw Error("unknown Cartan family '" + std::string(1, s[0]) + "'");
  }
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw Error("cannot parse Cartan type '" + text + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw Error("cannot parse Cartan type '" + text + "'");
  }
  CartanType ct{static_cast<Family>(f), rank};
  ct.validate();
  return ct;
}

Root::Root(std::initializer_list<int> coords) : rank_(static_cast<std::uint8_t>(coords.size())) {
  if (coords.size() > static_cast<std::size_t>(kMaxRank)) throw Error("root has too many coordinates");
  int i = 0;
  for (int c : coords) coords_[i++] = static_cast<std::int8_t>(c);
}

Root Root::simple(int rank, int index) {
  if (index < 1 || index > rank) throw Error("simple index " + std::to_string(index) + " out of range 1.." + std::to_string(rank));
  Root r(rank);
  r.coords_[index - 1] = 1;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(coords_.begin(), coords_.begin() + rank_, [](auto c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coords_.begin(), coords_.begin() + rank_, [](auto c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coords_.begin(), coords_.begin() + rank_, [](auto c) { return c <= 0; });
}

int Root::height() const {
  int h = 0;
  for (int i = 0; i < rank_; ++i) h += coords_[i];
  return h;
}

std::uint32_t Root::support() const {
  std::uint32_t mask = 0;
  for (int i = 0; i < rank_; ++i) {
    if (coords_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

Root Root::operator-() const {
  Root r(rank_);
  for (int i = 0; i < rank_; ++i) r.coords_[i] = static_cast<std::int8_t>(-coords_[i]);
  return r;
}

Root& Root::operator+=(const Root& other) {
  for (int i = 0; i < rank_; ++i) coords_[i] = static_cast<std::int8_t>(coords_[i] + other.coords_[i]);
  return *this;
}

Root& Root::operator-=(const Root& other) {
  for (int i = 0; i < rank_; ++i) coords_[i] = static_cast<std::int8_t>(coords_[i] - other.coords_[i]);
  return *this;
}

Root operator*(int k, Root a) {
  for (int i = 0; i < a.rank_; ++i) a.coords_[i] = static_cast<std::int8_t>(k * a.coords_[i]);
  return a;
}

std::optional<int> Root::multiple_of(const Root& other) const {
  std::optional<int> k;
  for (int i = 0; i < rank_; ++i) {
    const int a = coords_[i];
    const int b = other.coords_[i];
    if (b == 0) {
      if (a != 0) return std::nullopt;
      continue;
    }
    if (a % b != 0) return std::nullopt;
    if (k && *k != a / b) return std::nullopt;
    k = a / b;
  }
  if (!k) return is_zero() ? std::optional<int>(0) : std::nullopt;
  return k;
}

std::vector<int> Root::coords() const { return {coords_.begin(), coords_.begin() + rank_}; }

std::string Root::to_string() const {
  if (is_zero()) return "0";
  const bool neg = is_negative();
  std::ostringstream os;
  bool first = true;
  int terms = 0;
  for (int i = 0; i < rank_; ++i) {
    int c = neg ? -coords_[i] : coords_[i];
    if (c == 0) continue;
    ++terms;
    if (c < 0) {
      os << "-";
      c = -c;
    } else if (!first) {
      os << "+";
    }
    if (c != 1) os << c;
    os << "a" << (i + 1);
    first = false;
  }
  if (!neg) return os.str();
  return terms == 1 ? "-" + os.str() : "-(" + os.str() + ")";
}

std::vector<std::vector<int>> cartan_matrix(const CartanType& ct) {
  ct.validate();
  const int n = ct.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (ct.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      a[n - 1][n - 2] = -2;
      a[n - 2][n - 1] = -1;
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case Family::E:
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i) link(i, i + 1);
      break;
  }
  return a;
}

std::size_t classical_positive_root_count(const CartanType& ct) {
  const std::size_t n = static_cast<std::size_t>(ct.rank);
  switch (ct.family) {
    case Family::A:
      return n * (n + 1) / 2;
    case Family::B:
    case Family::C:
      return n * n;
    case Family::D:
      return n * (n - 1);
    case Family::E:
      return n == 6 ? 36 : 63;
  }
  return 0;
}

RootSystem RootSystem::build(const CartanType& ct) {
  ct.validate();
  RootSystem rs;
  rs.type_ = ct;
  rs.cartan_ = cartan_matrix(ct);
  const int n = ct.rank;
  rs.sym_.assign(n, 1);
  if (ct.family == Family::B) {
    for (int i = 0; i < n - 1; ++i) rs.sym_[i] = 2;
  } else if (ct.family == Family::C) {
    rs.sym_[n - 1] = 2;
  }

  // Saturate the simple roots level by level: beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0 where p is the length of the alpha_i-string below beta.
  std::deque<Root> queue;
  for (int i = 1; i <= n; ++i) {
    Root a = Root::simple(n, i);
    rs.index_.emplace(a, rs.positive_.size());
    rs.positive_.push_back(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    const Root beta = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i) {
      const Root ai = Root::simple(n, i);
      int p = 0;
      for (Root down = beta - ai; rs.index_.contains(down); down -= ai) ++p;
      if (p - rs.simple_pairing(beta, i) <= 0) continue;
      const Root up = beta + ai;
      if (rs.index_.contains(up)) continue;
      rs.index_.emplace(up, rs.positive_.size());
      rs.positive_.push_back(up);
      queue.push_back(up);
    }
  }

  rs.all_ = rs.positive_;
  for (const Root& r : rs.positive_) {
    rs.index_.emplace(-r, rs.all_.size());
    rs.all_.push_back(-r);
  }

  const Root* top = &rs.positive_.front();
  for (const Root& r : rs.positive_) {
    if (r.height() > top->height()) top = &r;
  }
  rs.highest_ = *top;
  for (const Root& r : rs.positive_) {
    for (int i = 0; i < n; ++i) {
      if (r[i] > rs.highest_[i]) throw InvariantViolation("highest root is not coordinatewise maximal in " + ct.name());
    }
  }
  return rs;
}

std::optional<std::size_t> RootSystem::find(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::inner(const Root& beta, const Root& alpha) const {
  const int n = rank();
  int sum = 0;
  for (int i = 0; i < n; ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (alpha[j] == 0) continue;
      sum += beta[i] * alpha[j] * sym_[i] * cartan_[i][j];
    }
  }
  return sum;
}

int RootSystem::pairing(const Root& beta, const Root& alpha) const {
  const int aa = inner(alpha, alpha);
  if (aa == 0) throw Error("pairing with the zero vector");
  const int num = 2 * inner(beta, alpha);
  if (num % aa != 0) throw InvariantViolation("non-integral pairing <" + beta.to_string() + ", " + alpha.to_string() + "^vee>");
  return num / aa;
}

int RootSystem::simple_pairing(const Root& beta, int i) const {
  int sum = 0;
  for (int j = 0; j < rank(); ++j) sum += cartan_[i - 1][j] * beta[j];
  return sum;
}

Root RootSystem::reflect(const Root& alpha, const Root& beta) const {
  Root r = beta - pairing(beta, alpha) * alpha;
  if (!is_root(r)) {
    throw InvariantViolation("reflection of " + beta.to_string() + " in " + alpha.to_string() + " left the root system");
  }
  return r;
}

std::vector<int> RootSystem::cominuscule_simples() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i) {
    if (highest_[i] == 1) out.push_back(i + 1);
  }
  return out;
}

}  // namespace nash
