#include "delsarte/krawtchouk.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace delsarte {

Integer binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a)
    return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

Integer pow2(long n) {
  if (n < 0)
    throw std::invalid_argument("pow2: negative exponent");
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return r;
}

Integer krawtchouk_eval(long j, long i, long n) {
  if (n < 0)
    throw std::invalid_argument("krawtchouk_eval: negative n");
  Integer sum = 0;
  for (long k = 0; k <= j; ++k) {
    Integer term = binomial(i, k) * binomial(n - i, j - k);
    if ((k & 1) != 0)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

KrawtchoukTable::KrawtchoukTable(long n) : n_(n) {
  if (n < 0)
    throw std::invalid_argument("KrawtchoukTable: negative n");
  entries_.assign(n + 1, std::vector<Integer>(n + 1));
  for (long i = 0; i <= n; ++i)
    entries_[0][i] = 1;
  if (n >= 1) {
    for (long i = 0; i <= n; ++i)
      entries_[1][i] = n - 2 * i;
  }
  // (j+1) K_{j+1}(i) = (n-2i) K_j(i) - (n-j+1) K_{j-1}(i); division is exact.
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i <= n; ++i) {
      Integer num =
          Integer(n - 2 * i) * entries_[j][i] - Integer(n - j + 1) * entries_[j - 1][i];
      mpz_divexact_ui(entries_[j + 1][i].get_mpz_t(), num.get_mpz_t(),
                      static_cast<unsigned long>(j + 1));
    }
  }
}

KrawtchoukTable::KrawtchoukTable(long n, std::vector<std::vector<Integer>> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(n + 1))
    throw std::invalid_argument("KrawtchoukTable: bad entry shape");
  for (const auto& row : entries_)
    if (row.size() != static_cast<std::size_t>(n + 1))
      throw std::invalid_argument("KrawtchoukTable: bad entry shape");
}

Integer KrawtchoukTable::value(long j, long i) const {
  if (j < 0 || j > n_ || i < 0 || i > n_)
    return 0;
  return entries_[j][i];
}

const KrawtchoukTable& krawtchouk_table(long n) {
  static std::mutex mutex;
  static std::map<long, std::unique_ptr<KrawtchoukTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<KrawtchoukTable>(n)).first;
  return *it->second;
}

namespace {

std::string indices(std::initializer_list<long> v) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (long x : v) {
    if (!first)
      os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

std::vector<IdentityCheck> verify_identities(const KrawtchoukTable& t) {
  const long n = t.n();
  if (n < 1)
    throw std::invalid_argument("verify_identities: requires n >= 1");
  std::vector<IdentityCheck> out;
  auto record = [&out](std::string name, bool pass, std::string cx) {
    out.push_back({std::move(name), pass, pass ? std::string() : std::move(cx)});
  };

  // Agreement with the defining alternating sum.
  {
    bool ok = true;
    std::string cx;
    for (long j = 0; j <= n && ok; ++j)
      for (long i = 0; i <= n && ok; ++i)
        if (t.at(j, i) != krawtchouk_eval(j, i, n)) {
          ok = false;
          cx = "n=" + std::to_string(n) + " at (j,i)=" + indices({j, i});
        }
    record("defining sum", ok, cx);
  }

  // Reciprocity: C(n,i) K_j(i) = C(n,j) K_i(j).
  {
    bool ok = true;
    std::string cx;
    for (long j = 0; j <= n && ok; ++j)
      for (long i = 0; i <= n && ok; ++i)
        if (binomial(n, i) * t.at(j, i) != binomial(n, j) * t.at(i, j)) {
          ok = false;
          cx = "n=" + std::to_string(n) + " at (i,j)=" + indices({i, j});
        }
    record("reciprocity", ok, cx);
  }

  // Basic properties: K_0(i)=1, K_j(0)=C(n,j), K_{n-j}(i)=(-1)^i K_j(i),
  // K_j(n-i)=(-1)^j K_j(i).
  {
    bool ok = true;
    std::string cx;
    for (long j = 0; j <= n && ok; ++j) {
      if (t.at(j, 0) != binomial(n, j)) {
        ok = false;
        cx = "K_j(0) != C(n,j) at j=" + std::to_string(j);
      }
      for (long i = 0; i <= n && ok; ++i) {
        if (t.at(0, i) != 1) {
          ok = false;
          cx = "K_0(i) != 1 at i=" + std::to_string(i);
        } else if (t.at(n - j, i) != ((i & 1) ? -t.at(j, i) : t.at(j, i))) {
          ok = false;
          cx = "K_{n-j}(i) symmetry at (j,i)=" + indices({j, i});
        } else if (t.at(j, n - i) != ((j & 1) ? -t.at(j, i) : t.at(j, i))) {
          ok = false;
          cx = "K_j(n-i) symmetry at (j,i)=" + indices({j, i});
        }
      }
    }
    record("basic properties", ok, cx);
  }

  // Orthogonality: sum_i C(n,i) K_j(i) K_k(i) = 2^n C(n,j) delta_jk.
  {
    bool ok = true;
    std::string cx;
    const Integer two_n = pow2(n);
    for (long j = 0; j <= n && ok; ++j)
      for (long k = 0; k <= n && ok; ++k) {
        Integer sum = 0;
        for (long i = 0; i <= n; ++i)
          sum += binomial(n, i) * t.at(j, i) * t.at(k, i);
        Integer expect = (j == k) ? Integer(two_n * binomial(n, j)) : Integer(0);
        if (sum != expect) {
          ok = false;
          cx = "n=" + std::to_string(n) + " at (n,j,k)=" + indices({n, j, k});
        }
      }
    record("orthogonality", ok, cx);
  }

  // Column sums: sum_j K_j = (2^n, 0, ..., 0).
  {
    bool ok = true;
    std::string cx;
    for (long i = 0; i <= n && ok; ++i) {
      Integer sum = 0;
      for (long j = 0; j <= n; ++j)
        sum += t.at(j, i);
      Integer expect = (i == 0) ? pow2(n) : Integer(0);
      if (sum != expect) {
        ok = false;
        cx = "column i=" + std::to_string(i);
      }
    }
    record("column sums", ok, cx);
  }

  // Three-term recurrence, with K_{-1} and K_{n+1} zero by convention.
  {
    bool ok = true;
    std::string cx;
    for (long j = 0; j <= n && ok; ++j)
      for (long i = 0; i <= n && ok; ++i) {
        Integer lhs = Integer(j + 1) * t.value(j + 1, i);
        Integer rhs =
            Integer(n - 2 * i) * t.at(j, i) - Integer(n - j + 1) * t.value(j - 1, i);
        if (lhs != rhs) {
          ok = false;
          cx = "at (j,i)=" + indices({j, i});
        }
      }
    record("three-term recurrence", ok, cx);
  }

  // Cross-length recurrences against the length n-1 table.
  {
    const KrawtchoukTable& s = krawtchouk_table(n - 1);
    bool ok = true;
    std::string cx;
    for (long j = 0; j <= n && ok; ++j)
      for (long i = 0; i <= n - 1 && ok; ++i)
        if (t.at(j, i) != s.value(j, i) + s.value(j - 1, i)) {
          ok = false;
          cx = "at (j,i)=" + indices({j, i});
        }
    record("length descent", ok, cx);

    ok = true;
    cx.clear();
    for (long j = 0; j <= n - 1 && ok; ++j)
      for (long i = 0; i <= n - 1 && ok; ++i)
        if (2 * s.at(j, i) != t.at(j, i) + t.at(j, i + 1)) {
          ok = false;
          cx = "at (j,i)=" + indices({j, i});
        }
    record("length ascent", ok, cx);
  }

  // Magnitude bound: for j != n/2, |K_j(1)| = |C(n,j)(n-2j)/n| >= |K_j(i)|
  // for all i in [n-1].
  {
    bool ok = true;
    std::string cx;
    for (long j = 0; j <= n && ok; ++j) {
      if (2 * j == n)
        continue;
      Rational bound(binomial(n, j) * Integer(n - 2 * j), Integer(n));
      if (abs(Rational(t.at(j, 1))) != abs(bound)) {
        ok = false;
        cx = "|K_j(1)| formula at j=" + std::to_string(j);
        break;
      }
      for (long i = 1; i <= n - 1; ++i)
        if (abs(Rational(t.at(j, i))) > abs(bound)) {
          ok = false;
          cx = "at (j,i)=" + indices({j, i});
          break;
        }
    }
    record("magnitude bound", ok, cx);
  }

  // K^2 = 2^n I.
  {
    bool ok = true;
    std::string cx;
    const Integer two_n = pow2(n);
    for (long j = 0; j <= n && ok; ++j)
      for (long k = 0; k <= n && ok; ++k) {
        Integer sum = 0;
        for (long i = 0; i <= n; ++i)
          sum += t.at(j, i) * t.at(i, k);
        Integer expect = (j == k) ? two_n : Integer(0);
        if (sum != expect) {
          ok = false;
          cx = "at (j,k)=" + indices({j, k});
        }
      }
    record("matrix involution", ok, cx);
  }

  return out;
}

std::vector<IdentityCheck> verify_identities(long n) {
  return verify_identities(krawtchouk_table(n));
}

}  // namespace delsarte
