#include "ccg/families.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>

#include "ccg/error.hpp"
#include "ccg/projective.hpp"

namespace ccg {
namespace {

std::string join_factors(const std::vector<std::uint64_t>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += "x";
    s += "C" + std::to_string(f[i]);
  }
  return s;
}

std::uint64_t param(const GroupSpec& spec, std::size_t i, const char* what) {
  if (spec.params.size() <= i) throw InputError(std::string("missing parameter ") + what);
  return spec.params[i];
}

void require_degree(std::uint64_t n) {
  if (n > kMaxDegree) {
    throw InputError("permutation degree " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxDegree));
  }
}

Permutation from_map(std::size_t n, auto&& f) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(f(i));
  return Permutation(std::move(img));
}

FiniteGroup cyclic(std::uint64_t n, std::size_t cap) {
  if (n < 1) throw InputError("cyclic group needs n >= 1");
  require_degree(n);
  return enumerate_group({from_map(n, [&](std::size_t i) { return (i + 1) % n; })}, cap);
}

FiniteGroup abelian(const std::vector<std::uint64_t>& factors, std::size_t cap) {
  if (factors.empty()) throw InputError("abelian group needs at least one invariant factor");
  std::uint64_t total = 0;
  for (auto f : factors) {
    if (f < 1) throw InputError("invariant factors must be >= 1");
    total += f;
  }
  require_degree(total);
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto f : factors) {
    gens.push_back(from_map(total, [&](std::size_t i) {
      if (i < offset || i >= offset + f) return i;
      return offset + (i - offset + 1) % f;
    }));
    offset += f;
  }
  return enumerate_group(gens, cap);
}

FiniteGroup dihedral(std::uint64_t n, std::size_t cap) {
  if (n < 3) throw InputError("dihedral group D_2n needs n >= 3");
  require_degree(n);
  const Permutation r = from_map(n, [&](std::size_t i) { return (i + 1) % n; });
  const Permutation s = from_map(n, [&](std::size_t i) { return (n - i) % n; });
  return enumerate_group({r, s}, cap);
}

// Left-regular representation of a group given by a multiplication table on
// indices 0..order-1.
FiniteGroup regular(std::size_t order, const std::vector<std::size_t>& gens, auto&& mul,
                    std::size_t cap) {
  require_degree(order);
  std::vector<Permutation> perms;
  for (std::size_t g : gens) perms.push_back(from_map(order, [&](std::size_t h) { return mul(g, h); }));
  return enumerate_group(perms, cap);
}

// T_4n = <a, x | a^2n = 1, x^2 = a^n, x^-1 a x = a^-1>; element a^k x^j is k + 2n j.
FiniteGroup dicyclic(std::uint64_t n, std::size_t cap) {
  if (n < 2) throw InputError("dicyclic group T_4n needs n >= 2");
  const std::size_t m = 2 * n;
  auto mul = [&](std::size_t u, std::size_t v) {
    const std::size_t k = u % m, j = u / m, l = v % m, t = v / m;
    std::size_t e = j ? (k + m - l) % m : (k + l) % m;
    std::size_t x = j + t;
    if (x == 2) {
      e = (e + n) % m;
      x = 0;
    }
    return e + m * x;
  };
  return regular(2 * m, {1, m}, mul, cap);
}

FiniteGroup symmetric(std::uint64_t n, std::size_t cap) {
  if (n < 1) throw InputError("symmetric group needs n >= 1");
  require_degree(n);
  if (n == 1) return enumerate_group({Permutation(1)}, cap);
  const Permutation t = Permutation::from_cycles(n, {{0, 1}});
  const Permutation c = from_map(n, [&](std::size_t i) { return (i + 1) % n; });
  return enumerate_group({t, c}, cap);
}

FiniteGroup alternating(std::uint64_t n, std::size_t cap) {
  if (n < 1) throw InputError("alternating group needs n >= 1");
  require_degree(n);
  if (n < 3) return enumerate_group({Permutation(n)}, cap);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
  return enumerate_group(gens, cap);
}

FiniteGroup psl2(std::uint64_t q, std::size_t cap) {
  static const std::vector<std::uint64_t> pinned{4, 5, 7, 8, 9, 13};
  if (std::find(pinned.begin(), pinned.end(), q) == pinned.end()) {
    throw InputError("PSL(2,q) is only built for q in {4,5,7,8,9,13}");
  }
  const GaloisField f = GaloisField::of_order(static_cast<unsigned>(q));
  const ProjectiveSpace line(f, 2);
  std::vector<Permutation> gens;
  unsigned beta = 1;
  for (unsigned i = 0; i < f.degree(); ++i, beta *= f.characteristic()) {
    gens.push_back(line.induced_permutation(make_matrix(f, 2, {1, static_cast<int>(beta), 0, 1})));
  }
  gens.push_back(line.induced_permutation(make_matrix(f, 2, {0, -1, 1, 0})));
  FiniteGroup g = enumerate_group(gens, cap);
  const std::uint64_t expect = q * (q - 1) * (q + 1) / std::gcd<std::uint64_t>(2, q - 1);
  if (g.order() != expect) {
    throw IntegrityError("PSL(2," + std::to_string(q) + ") enumerated to order " +
                         std::to_string(g.order()) + ", expected " + std::to_string(expect));
  }
  return g;
}

FiniteGroup psl3_3(std::size_t cap) {
  const GaloisField f = GaloisField::of_order(3);
  const ProjectiveSpace plane(f, 3);
  const Permutation e12 = plane.induced_permutation(make_matrix(f, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1}));
  const Permutation cyc = plane.induced_permutation(make_matrix(f, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0}));
  FiniteGroup g = enumerate_group({e12, cyc}, cap);
  if (g.order() != 5616) {
    throw IntegrityError("PSL(3,3) enumerated to order " + std::to_string(g.order()));
  }
  return g;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// C_p : C_q as the affine maps x -> u^i x + c on Z_p, u of order q.
FiniteGroup pq(std::uint64_t p, std::uint64_t q, std::size_t cap) {
  if (!is_prime(p) || !is_prime(q) || (p - 1) % q != 0) {
    throw InputError("C_p:C_q needs primes p, q with q dividing p - 1");
  }
  require_degree(p);
  std::uint64_t u = 2;
  for (; u < p; ++u) {
    std::uint64_t x = 1, k = 0;
    do {
      x = x * u % p;
      ++k;
    } while (x != 1);
    if (k == q) break;
  }
  const Permutation t = from_map(p, [&](std::size_t i) { return (i + 1) % p; });
  const Permutation m = from_map(p, [&](std::size_t i) { return i * u % p; });
  return enumerate_group({t, m}, cap);
}

// Affine maps (x, y) -> (x + 1, y) and (x, y) -> (x, y + x) on Z_p^2.
FiniteGroup heisenberg(std::uint64_t p, std::size_t cap) {
  if (!is_prime(p) || p == 2) throw InputError("Heisenberg group needs an odd prime p");
  require_degree(p * p);
  const Permutation s = from_map(p * p, [&](std::size_t i) { return ((i / p + 1) % p) * p + i % p; });
  const Permutation t = from_map(p * p, [&](std::size_t i) {
    const std::size_t x = i / p, y = i % p;
    return x * p + (y + x) % p;
  });
  return enumerate_group({s, t}, cap);
}

std::mutex g_dir_mu;
std::filesystem::path g_dir_override;

}  // namespace

std::string GroupSpec::display_name() const {
  auto p = [&](std::size_t i) { return i < params.size() ? std::to_string(params[i]) : std::string("?"); };
  switch (family) {
    case Family::cyclic: return "C" + p(0);
    case Family::abelian: return join_factors(params);
    case Family::dihedral: return params.empty() ? "D?" : "D" + std::to_string(2 * params[0]);
    case Family::dicyclic: return params.empty() ? "T?" : "T" + std::to_string(4 * params[0]);
    case Family::generalized_dihedral: return "Dih(" + join_factors(params) + ")";
    case Family::symmetric: return "Sym(" + p(0) + ")";
    case Family::alternating: return "Alt(" + p(0) + ")";
    case Family::psl2: return "PSL(2," + p(0) + ")";
    case Family::psl3_3: return "PSL(3,3)";
    case Family::pq: return "C" + p(0) + ":C" + p(1);
    case Family::heisenberg:
      return params.empty() ? "He?" : "He" + std::to_string(params[0] * params[0] * params[0]);
    case Family::fixture: return fixture;
  }
  return "?";
}

FiniteGroup make_generalized_dihedral(const std::vector<std::uint64_t>& factors, std::size_t cap) {
  if (factors.empty()) throw InputError("generalized dihedral group needs invariant factors");
  std::size_t a = 1;
  for (auto f : factors) {
    if (f < 2) throw InputError("invariant factors must be >= 2");
    a *= f;
    if (2 * a > kMaxDegree) throw InputError("generalized dihedral group too large for the regular representation");
  }
  // Element (v, j) with v in A mixed-radix encoded is v + |A| j.
  auto add = [&](std::size_t u, std::size_t v, bool negate) {
    std::size_t r = 0, w = 1;
    for (auto f : factors) {
      const std::size_t x = u % f, y = v % f;
      r += w * ((negate ? x + f - y : x + y) % f);
      u /= f;
      v /= f;
      w *= f;
    }
    return r;
  };
  auto mul = [&](std::size_t g, std::size_t h) {
    const std::size_t j = g / a, t = h / a;
    return add(g % a, h % a, j == 1) + a * ((j + t) % 2);
  };
  std::vector<std::size_t> gens;
  std::size_t w = 1;
  for (auto f : factors) {
    gens.push_back(w);
    w *= f;
  }
  gens.push_back(a);
  return regular(2 * a, gens, mul, cap);
}

FiniteGroup build(const GroupSpec& spec, std::size_t cap) {
  FiniteGroup g = [&]() -> FiniteGroup {
    switch (spec.family) {
      case Family::cyclic: return cyclic(param(spec, 0, "n"), cap);
      case Family::abelian: return abelian(spec.params, cap);
      case Family::dihedral: return dihedral(param(spec, 0, "n"), cap);
      case Family::dicyclic: return dicyclic(param(spec, 0, "n"), cap);
      case Family::generalized_dihedral: return make_generalized_dihedral(spec.params, cap);
      case Family::symmetric: return symmetric(param(spec, 0, "n"), cap);
      case Family::alternating: return alternating(param(spec, 0, "n"), cap);
      case Family::psl2: return psl2(param(spec, 0, "q"), cap);
      case Family::psl3_3: return psl3_3(cap);
      case Family::pq: return pq(param(spec, 0, "p"), param(spec, 1, "q"), cap);
      case Family::heisenberg: return heisenberg(param(spec, 0, "p"), cap);
      case Family::fixture: return load_fixture(spec.fixture, cap);
    }
    throw InputError("unknown family");
  }();
  g.set_name(spec.display_name());
  return g;
}

FixtureRecord parse_fixture(const std::string& text) {
  FixtureRecord rec;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw IntegrityError("fixture line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string rest;
    std::getline(ls >> std::ws, rest);
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.pop_back();
    auto number = [&] {
      try {
        std::size_t pos = 0;
        const auto v = std::stoull(rest, &pos);
        if (pos != rest.size()) fail("trailing characters after number");
        return static_cast<std::size_t>(v);
      } catch (const std::logic_error&) {
        fail("expected a number after '" + key + "'");
      }
      return std::size_t{0};
    };
    if (key == "name") {
      if (rest.empty()) fail("empty name");
      rec.name = rest;
    } else if (key == "degree") {
      rec.degree = number();
    } else if (key == "order") {
      rec.order = number();
    } else if (key == "classes") {
      rec.class_count = number();
    } else if (key == "gen") {
      if (rest.empty()) fail("empty generator");
      rec.generators.push_back(rest);
    } else if (key == "label") {
      const auto sp = rest.find_last_of(" \t");
      if (sp == std::string::npos) fail("label needs a representative and a class name");
      std::string cyc = rest.substr(0, sp);
      while (!cyc.empty() && std::isspace(static_cast<unsigned char>(cyc.back()))) cyc.pop_back();
      rec.labels.emplace_back(cyc, rest.substr(sp + 1));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (rec.name.empty() || rec.degree == 0 || rec.order == 0 || rec.generators.empty()) {
    throw IntegrityError("fixture needs name, degree, order and at least one gen line");
  }
  return rec;
}

std::filesystem::path fixture_dir() {
  {
    std::lock_guard lock(g_dir_mu);
    if (!g_dir_override.empty()) return g_dir_override;
  }
  if (const char* env = std::getenv("CCG_FIXTURE_DIR"); env && *env) return env;
#ifdef CCG_FIXTURE_DIR
  return CCG_FIXTURE_DIR;
#else
  return "data/fixtures";
#endif
}

void set_fixture_dir(std::filesystem::path dir) {
  std::lock_guard lock(g_dir_mu);
  g_dir_override = std::move(dir);
}

FiniteGroup build_fixture(const FixtureRecord& rec, std::size_t cap) {
  std::vector<Permutation> gens;
  try {
    for (const auto& s : rec.generators) gens.push_back(Permutation::parse(s, rec.degree));
  } catch (const InputError& e) {
    throw IntegrityError("fixture " + rec.name + ": " + e.what());
  }
  FiniteGroup g = enumerate_group(gens, cap, rec.name);
  if (g.order() != rec.order) {
    throw IntegrityError("fixture " + rec.name + " enumerated to order " + std::to_string(g.order()) +
                         ", declared " + std::to_string(rec.order));
  }
  if (rec.class_count && g.classes().size() != rec.class_count) {
    throw IntegrityError("fixture " + rec.name + " has " + std::to_string(g.classes().size()) +
                         " classes, declared " + std::to_string(rec.class_count));
  }
  std::vector<std::pair<Permutation, std::string>> table;
  try {
    for (const auto& [cyc, label] : rec.labels) table.emplace_back(Permutation::parse(cyc, rec.degree), label);
  } catch (const InputError& e) {
    throw IntegrityError("fixture " + rec.name + " label table: " + e.what());
  }
  g.relabel(table);
  return g;
}

FiniteGroup load_fixture(const std::string& name, std::size_t cap) {
  const auto path = fixture_dir() / (name + ".fixture");
  std::ifstream in(path);
  if (!in) throw IntegrityError("missing fixture file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  FixtureRecord rec = parse_fixture(buf.str());
  if (rec.name != name) throw IntegrityError("fixture file " + path.string() + " declares name " + rec.name);
  return build_fixture(rec, cap);
}

}  // namespace ccg
