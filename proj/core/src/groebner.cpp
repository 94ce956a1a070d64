#include "su3/groebner.hpp"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>

namespace su3 {

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  if (text.rfind("block:", 0) == 0) {
    std::string k(text.substr(6));
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad block size in order '" + std::string(text) + "'");
    }
    return eliminate(std::stoul(k));
  }
  throw ParseError("unknown monomial order '" + std::string(text) + "'");
}

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block:" + std::to_string(block);
  }
  return "?";
}

Budget Budget::minutes(double m, std::size_t mib) {
  Budget b;
  b.time = std::chrono::milliseconds(static_cast<long long>(m * 60000.0));
  b.memory_bytes = mib << 20;
  return b;
}

namespace {

constexpr std::size_t kMaxVars = 64;

struct Mon {
  std::array<std::uint8_t, kMaxVars> e{};
  std::uint32_t deg = 0;
  std::uint64_t mask = 0;

  bool divides(const Mon& o) const {
    if ((mask & ~o.mask) != 0 || deg > o.deg) return false;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      int i = std::countr_zero(m);
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }
};

Mon mon_mul(const Mon& a, const Mon& b) {
  Mon r;
  r.mask = a.mask | b.mask;
  r.deg = a.deg + b.deg;
  for (std::uint64_t m = r.mask; m; m &= m - 1) {
    int i = std::countr_zero(m);
    unsigned s = unsigned(a.e[i]) + b.e[i];
    if (s > 255) throw DegreeOverflow("exponent exceeds 255 in Groebner engine");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Mon mon_div(const Mon& a, const Mon& b) {  // a / b, b | a
  Mon r;
  r.deg = a.deg - b.deg;
  for (std::uint64_t m = a.mask; m; m &= m - 1) {
    int i = std::countr_zero(m);
    r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
    if (r.e[i]) r.mask |= std::uint64_t{1} << i;
  }
  return r;
}

Mon mon_lcm(const Mon& a, const Mon& b) {
  Mon r;
  r.mask = a.mask | b.mask;
  for (std::uint64_t m = r.mask; m; m &= m - 1) {
    int i = std::countr_zero(m);
    r.e[i] = std::max(a.e[i], b.e[i]);
    r.deg += r.e[i];
  }
  return r;
}

bool coprime(const Mon& a, const Mon& b) { return (a.mask & b.mask) == 0; }

bool mon_equal(const Mon& a, const Mon& b) {
  if (a.mask != b.mask || a.deg != b.deg) return false;
  for (std::uint64_t m = a.mask; m; m &= m - 1) {
    int i = std::countr_zero(m);
    if (a.e[i] != b.e[i]) return false;
  }
  return true;
}

class Order {
 public:
  Order(const MonomialOrder& o, std::size_t nvars) : spec_(o), n_(nvars) {
    if (o.kind == MonomialOrder::Kind::Block && o.block > nvars) {
      throw ParamOutOfRange("block size exceeds the number of variables");
    }
  }

  /// >0 when a > b.
  int compare(const Mon& a, const Mon& b) const {
    switch (spec_.kind) {
      case MonomialOrder::Kind::Grevlex:
        return grevlex(a, b, 0, n_, a.deg, b.deg);
      case MonomialOrder::Kind::Lex:
        for (std::size_t i = 0; i < n_; ++i) {
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
      case MonomialOrder::Kind::Block: {
        std::size_t k = spec_.block;
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < k; ++i) {
          da += a.e[i];
          db += b.e[i];
        }
        int c = grevlex(a, b, 0, k, da, db);
        if (c) return c;
        return grevlex(a, b, k, n_, a.deg - da, b.deg - db);
      }
    }
    return 0;
  }

 private:
  static int grevlex(const Mon& a, const Mon& b, std::size_t lo, std::size_t hi, std::uint32_t da,
                     std::uint32_t db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }

  MonomialOrder spec_;
  std::size_t n_;
};

struct Term {
  Mon m;
  mpz_class c;
};

struct IPoly {
  std::vector<Term> terms;  // strictly decreasing
  std::uint32_t sugar = 0;

  bool zero() const { return terms.empty(); }
  const Mon& lm() const { return terms.front().m; }
  const mpz_class& lc() const { return terms.front().c; }
};

/// Divides out the content; returns it (1 for zero polys). Leading coefficient made positive.
mpz_class remove_content(IPoly& p) {
  if (p.zero()) return 1;
  mpz_class g = 0;
  for (const auto& t : p.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.lc()) < 0) g = -g;
  if (g != 1) {
    for (auto& t : p.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

/// a*f - b*(m*g), both operands sorted decreasing.
IPoly combine(const IPoly& f, const mpz_class& a, const IPoly& g, const mpz_class& b, const Mon& m,
              const Order& ord) {
  IPoly r;
  r.terms.reserve(f.terms.size() + g.terms.size());
  std::size_t i = 0, j = 0;
  Term gt;
  bool have_g = false;
  auto load_g = [&] {
    if (j < g.terms.size()) {
      gt.m = mon_mul(g.terms[j].m, m);
      gt.c = g.terms[j].c * b;
      have_g = true;
    } else {
      have_g = false;
    }
  };
  load_g();
  while (i < f.terms.size() || have_g) {
    int c = !have_g ? 1 : (i >= f.terms.size() ? -1 : ord.compare(f.terms[i].m, gt.m));
    if (c > 0) {
      r.terms.push_back({f.terms[i].m, f.terms[i].c * a});
      ++i;
    } else if (c < 0) {
      gt.c = -gt.c;
      r.terms.push_back(std::move(gt));
      ++j;
      load_g();
    } else {
      mpz_class v = f.terms[i].c * a - gt.c;
      if (sgn(v) != 0) r.terms.push_back({f.terms[i].m, std::move(v)});
      ++i;
      ++j;
      load_g();
    }
  }
  r.sugar = std::max(f.sugar, g.sugar + m.deg);
  return r;
}

struct Engine {
  Order ord;
  std::size_t nvars;
  std::vector<IPoly> polys;
  std::vector<std::size_t> active;

  const IPoly* find_reducer(const Mon& m) const {
    const IPoly* best = nullptr;
    for (std::size_t k : active) {
      const IPoly& g = polys[k];
      if (g.lm().divides(m) && (!best || g.terms.size() < best->terms.size())) best = &g;
    }
    return best;
  }

  /// Reduces `f` until its leading term (top) or every term (full) is irreducible.
  /// `scale` accumulates the factor by which the original was multiplied.
  void reduce(IPoly& f, bool full, mpq_class* scale = nullptr) const {
    std::size_t pos = 0;
    std::size_t steps = 0;
    while (pos < f.terms.size()) {
      const IPoly* g = find_reducer(f.terms[pos].m);
      if (!g) {
        if (!full) break;
        ++pos;
        continue;
      }
      mpz_class gcd;
      mpz_gcd(gcd.get_mpz_t(), f.terms[pos].c.get_mpz_t(), g->lc().get_mpz_t());
      mpz_class a = g->lc() / gcd;
      mpz_class b = f.terms[pos].c / gcd;
      if (sgn(a) < 0) {
        a = -a;
        b = -b;
      }
      Mon m = mon_div(f.terms[pos].m, g->lm());
      // Terms before pos are untouched by the combination apart from scaling.
      IPoly head;
      head.terms.assign(f.terms.begin(), f.terms.begin() + static_cast<long>(pos));
      IPoly tail;
      tail.terms.assign(std::make_move_iterator(f.terms.begin() + static_cast<long>(pos)),
                        std::make_move_iterator(f.terms.end()));
      tail.sugar = f.sugar;
      IPoly reduced = combine(tail, a, *g, b, m, ord);
      for (auto& t : head.terms) t.c *= a;
      head.terms.insert(head.terms.end(), std::make_move_iterator(reduced.terms.begin()),
                        std::make_move_iterator(reduced.terms.end()));
      head.sugar = reduced.sugar;
      f = std::move(head);
      if (scale) *scale *= a;
      if (++steps % 4 == 0 || f.terms.size() < 64) {
        mpz_class cnt = remove_content(f);
        if (scale) *scale /= cnt;
      }
    }
    mpz_class cnt = remove_content(f);
    if (scale) *scale /= cnt;
  }
};

struct Pair {
  std::size_t i, j;
  Mon lcm;
  std::uint32_t sugar;
};

std::size_t resident_bytes() {
  std::ifstream statm("/proc/self/statm");
  std::size_t size = 0, resident = 0;
  if (!(statm >> size >> resident)) return 0;
  return resident * static_cast<std::size_t>(sysconf(_SC_PAGESIZE));
}

RingPtr shared_ring(const std::vector<Poly>& polys) {
  RingPtr ring;
  for (const auto& p : polys) {
    if (!p.ring() || p.is_constant()) continue;
    if (!ring) {
      ring = p.ring();
    } else if (ring != p.ring() && ring->names() != p.ring()->names()) {
      throw VariableMismatch("generators over different variable lists");
    }
  }
  if (!ring) {
    for (const auto& p : polys) {
      if (p.ring()) return p.ring();
    }
  }
  return ring;
}

IPoly to_internal(const Poly& p, const Order& ord) {
  IPoly out;
  mpz_class den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : p.terms()) {
    Term t;
    for (const auto& [v, e] : m.entries()) {
      if (v >= kMaxVars) throw ParamOutOfRange("Groebner engine supports at most 64 variables");
      if (e > 255) throw DegreeOverflow("exponent exceeds 255 in Groebner engine");
      t.m.e[v] = static_cast<std::uint8_t>(e);
      t.m.deg += e;
      t.m.mask |= std::uint64_t{1} << v;
    }
    t.c = c.get_num() * (den / c.get_den());
    out.terms.push_back(std::move(t));
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
  out.sugar = 0;
  for (const auto& t : out.terms) out.sugar = std::max(out.sugar, t.m.deg);
  return out;
}

Poly from_internal(const IPoly& p, const RingPtr& ring, bool make_monic) {
  Poly out;
  out = out + Poly::monomial(ring, Monomial(), Rational(0));
  Rational lead = make_monic && !p.zero() ? Rational(p.lc()) : Rational(1);
  for (const auto& t : p.terms) {
    Monomial m;
    for (std::uint64_t bits = t.m.mask; bits; bits &= bits - 1) {
      int i = std::countr_zero(bits);
      m = m * Monomial::variable(static_cast<std::uint32_t>(i), t.m.e[i]);
    }
    Rational c(t.c);
    c /= lead;
    out = out + Poly::monomial(ring, m, c);
  }
  return out;
}

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const MonomialOrder& order,
                             const Budget& budget, GroebnerStats* stats) {
  const auto start = std::chrono::steady_clock::now();
  RingPtr ring = shared_ring(gens);
  const std::size_t nvars = ring ? ring->size() : 0;
  if (nvars > kMaxVars) throw ParamOutOfRange("Groebner engine supports at most 64 variables");
  Engine eng{Order(order, nvars), nvars, {}, {}};
  std::vector<Pair> pairs;
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  st = GroebnerStats{};
  st.homogeneous = std::all_of(gens.begin(), gens.end(), [](const Poly& p) { return p.is_homogeneous(); });

  auto unit_basis = [&] {
    std::vector<Poly> one{Poly::monomial(ring, Monomial(), Rational(1))};
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return one;
  };

  // Gebauer-Moeller update with a new element at index h.
  auto update = [&](std::size_t h) {
    const Mon& lh = eng.polys[h].lm();
    std::vector<Pair> fresh;
    for (std::size_t g : eng.active) {
      const IPoly& pg = eng.polys[g];
      Mon l = mon_lcm(lh, pg.lm());
      std::uint32_t sugar = std::max(eng.polys[h].sugar + (l.deg - lh.deg), pg.sugar + (l.deg - pg.lm().deg));
      fresh.push_back({g, h, l, sugar});
    }
    // Chain criterion among the new pairs; coprime pairs are kept for now.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      bool cop = coprime(lh, eng.polys[p.i].lm());
      bool dominated = false;
      if (!cop) {
        for (std::size_t b = 0; b < fresh.size() && !dominated; ++b) {
          if (b == a) continue;
          const Pair& q = fresh[b];
          if (!q.lcm.divides(p.lcm)) continue;
          // Equal lcms: keep only the first one.
          if (mon_equal(q.lcm, p.lcm) && b > a) continue;
          dominated = true;
        }
      }
      if (!dominated) kept.push_back(p);
    }
    std::size_t before = pairs.size();
    // Old pairs made redundant by h.
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      Mon li = mon_lcm(eng.polys[p.i].lm(), lh);
      Mon lj = mon_lcm(eng.polys[p.j].lm(), lh);
      return !mon_equal(li, p.lcm) && !mon_equal(lj, p.lcm);
    });
    st.pairs_pruned += before - pairs.size() + (fresh.size() - kept.size());
    for (auto& p : kept) {
      if (coprime(lh, eng.polys[p.i].lm())) {
        ++st.pairs_pruned;  // product criterion
        continue;
      }
      pairs.push_back(std::move(p));
    }
    std::erase_if(eng.active, [&](std::size_t g) { return lh.divides(eng.polys[g].lm()); });
    eng.active.push_back(h);
    st.max_basis_size = std::max(st.max_basis_size, eng.active.size());
  };

  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    IPoly p = to_internal(g, eng.ord);
    remove_content(p);
    if (p.lm().deg == 0) return unit_basis();
    eng.polys.push_back(std::move(p));
    update(eng.polys.size() - 1);
  }
  if (eng.polys.empty()) return {};

  std::size_t iteration = 0;
  while (!pairs.empty()) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed > budget.time) {
      throw ResourceBudgetExceeded(ResourceBudgetExceeded::Resource::Time,
                                   "Groebner time budget exhausted after " +
                                       std::to_string(st.pairs_processed) + " pairs");
    }
    if (++iteration % 32 == 0 && resident_bytes() > budget.memory_bytes) {
      throw ResourceBudgetExceeded(ResourceBudgetExceeded::Resource::Memory,
                                   "Groebner memory budget exhausted");
    }
    // Sugar strategy, ties broken by the smaller lcm.
    auto best = pairs.begin();
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      if (it->sugar < best->sugar ||
          (it->sugar == best->sugar && eng.ord.compare(it->lcm, best->lcm) < 0)) {
        best = it;
      }
    }
    Pair p = *best;
    pairs.erase(best);
    ++st.pairs_processed;

    const IPoly& f = eng.polys[p.i];
    const IPoly& g = eng.polys[p.j];
    mpz_class gcd;
    mpz_gcd(gcd.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    IPoly fs;
    Mon mf = mon_div(p.lcm, f.lm());
    fs.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) fs.terms.push_back({mon_mul(t.m, mf), t.c});
    fs.sugar = f.sugar + mf.deg;
    IPoly s = combine(fs, g.lc() / gcd, g, f.lc() / gcd, mon_div(p.lcm, g.lm()), eng.ord);
    s.sugar = p.sugar;
    eng.reduce(s, false);
    if (s.zero()) {
      ++st.zero_reductions;
      continue;
    }
    if (s.lm().deg == 0) return unit_basis();
    eng.polys.push_back(std::move(s));
    update(eng.polys.size() - 1);
  }

  // Input generators can be redundant: keep only elements whose leading
  // monomial no other element divides (first one wins on ties).
  std::vector<IPoly> reduced;
  for (std::size_t a = 0; a < eng.active.size(); ++a) {
    const Mon& la = eng.polys[eng.active[a]].lm();
    bool redundant = false;
    for (std::size_t b = 0; b < eng.active.size() && !redundant; ++b) {
      if (b == a) continue;
      const Mon& lb = eng.polys[eng.active[b]].lm();
      if (lb.divides(la) && (!mon_equal(la, lb) || b < a)) redundant = true;
    }
    if (!redundant) reduced.push_back(eng.polys[eng.active[a]]);
  }
  // Tail reduction: every non-leading term reduced against the other elements.
  for (std::size_t a = 0; a < reduced.size(); ++a) {
    IPoly& f = reduced[a];
    std::size_t pos = 1;
    while (pos < f.terms.size()) {
      const IPoly* g = nullptr;
      for (std::size_t b = 0; b < reduced.size(); ++b) {
        if (b == a) continue;
        if (reduced[b].lm().divides(f.terms[pos].m)) {
          g = &reduced[b];
          break;
        }
      }
      if (!g) {
        ++pos;
        continue;
      }
      mpz_class gcd;
      mpz_gcd(gcd.get_mpz_t(), f.terms[pos].c.get_mpz_t(), g->lc().get_mpz_t());
      mpz_class ca = g->lc() / gcd;
      mpz_class cb = f.terms[pos].c / gcd;
      if (sgn(ca) < 0) {
        ca = -ca;
        cb = -cb;
      }
      Mon m = mon_div(f.terms[pos].m, g->lm());
      IPoly tail;
      tail.terms.assign(f.terms.begin() + static_cast<long>(pos), f.terms.end());
      IPoly r = combine(tail, ca, *g, cb, m, eng.ord);
      f.terms.resize(pos);
      for (auto& t : f.terms) t.c *= ca;
      f.terms.insert(f.terms.end(), r.terms.begin(), r.terms.end());
      remove_content(f);
    }
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const IPoly& a, const IPoly& b) { return eng.ord.compare(a.lm(), b.lm()) > 0; });
  std::vector<Poly> out;
  out.reserve(reduced.size());
  for (const auto& p : reduced) out.push_back(from_internal(p, ring, true));
  st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order) {
  std::vector<Poly> all = basis;
  all.push_back(f);
  RingPtr ring = shared_ring(all);
  const std::size_t nvars = ring ? ring->size() : 0;
  Engine eng{Order(order, nvars), nvars, {}, {}};
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    IPoly p = to_internal(g, eng.ord);
    remove_content(p);
    eng.polys.push_back(std::move(p));
    eng.active.push_back(eng.polys.size() - 1);
  }
  if (f.is_zero()) return Poly::monomial(ring, Monomial(), Rational(0));
  IPoly r = to_internal(f, eng.ord);
  mpz_class den = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  mpq_class scale(den);
  eng.reduce(r, true, &scale);
  Poly out = from_internal(r, ring, false);
  return out.scaled(Rational(1) / scale);
}

Monomial leading_monomial(const Poly& f, const MonomialOrder& order) {
  RingPtr ring = f.ring();
  Order ord(order, ring ? ring->size() : 0);
  IPoly p = to_internal(f, ord);
  if (p.zero()) throw DivisionByZero("leading monomial of zero");
  Monomial m;
  for (std::uint64_t bits = p.lm().mask; bits; bits &= bits - 1) {
    int i = std::countr_zero(bits);
    m = m * Monomial::variable(static_cast<std::uint32_t>(i), p.lm().e[i]);
  }
  return m;
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (auto& g : generators_) {
    if (g.ring() && g.ring() != ring_ && g.ring()->names() != ring_->names() && !g.is_constant()) {
      throw VariableMismatch("generator over a different variable list");
    }
    g = g.rebase(ring_);
  }
}

const std::vector<Poly>& Ideal::groebner_basis(const MonomialOrder& order, const Budget& budget) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return it->second;
  }
  std::vector<Poly> gb = buchberger(generators_, order, budget);
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.emplace(order, std::move(gb)).first->second;
}

bool Ideal::is_unit(const Budget& budget) const {
  const auto& gb = groebner_basis(MonomialOrder::grevlex(), budget);
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

bool Ideal::contains(const Poly& f, const Budget& budget) const {
  return normal_form(f, groebner_basis(MonomialOrder::grevlex(), budget), MonomialOrder::grevlex())
      .is_zero();
}

namespace {

/// Ring with one auxiliary variable prepended.
RingPtr with_leading(const RingPtr& ring, const std::string& aux) {
  std::vector<std::string> names{aux};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  return PolyRing::make(std::move(names));
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), by);
  return m;
}

/// Basis elements free of variable 0, mapped back to `ring`.
std::vector<Poly> eliminate_first(const std::vector<Poly>& gb, const RingPtr& ring) {
  std::vector<std::size_t> back(ring->size() + 1, 0);
  for (std::size_t i = 1; i <= ring->size(); ++i) back[i] = i - 1;
  std::vector<Poly> out;
  for (const auto& g : gb) {
    auto sup = g.support();
    if (!sup.empty() && sup.front() == 0) continue;
    out.push_back(g.remap(ring, back));
  }
  return out;
}

}  // namespace

Ideal ideal_quotient_principal(const Ideal& q, const Poly& f, const Budget& budget) {
  if (f.is_zero()) throw DivisionByZero("quotient by the zero polynomial");
  const RingPtr& ring = q.ring();
  RingPtr ext = with_leading(ring, "_t");
  auto up = shift_map(ring->size(), 1);
  Poly t = Poly::variable(ext, std::size_t{0});
  std::vector<Poly> gens;
  for (const auto& g : q.generators()) gens.push_back(t * g.remap(ext, up));
  gens.push_back((Poly(1).rebase(ext) - t) * f.remap(ext, up));
  auto gb = buchberger(gens, MonomialOrder::eliminate(1), budget);
  std::vector<Poly> quotient;
  for (const auto& g : eliminate_first(gb, ring)) {
    auto d = exact_divide(g, f.rebase(ring));
    if (!d) throw InexactScalars("intersection element not divisible by the quotient polynomial");
    quotient.push_back(std::move(*d));
  }
  return Ideal(ring, std::move(quotient));
}

Ideal saturate(const Ideal& ideal, const Poly& f, const Budget& budget) {
  if (f.is_zero()) throw DivisionByZero("saturation by the zero polynomial");
  const RingPtr& ring = ideal.ring();
  RingPtr ext = with_leading(ring, "_y");
  auto up = shift_map(ring->size(), 1);
  Poly y = Poly::variable(ext, std::size_t{0});
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.remap(ext, up));
  gens.push_back(Poly(1).rebase(ext) - y * f.remap(ext, up));
  auto gb = buchberger(gens, MonomialOrder::eliminate(1), budget);
  return Ideal(ring, eliminate_first(gb, ring));
}

bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order, const Budget& budget) {
  if (a.ring()->names() != b.ring()->names()) throw VariableMismatch("ideals over different rings");
  const auto& ga = a.groebner_basis(order, budget);
  const auto& gb = b.groebner_basis(order, budget);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i) {
    if (!(ga[i].terms() == gb[i].terms())) return false;
  }
  return true;
}

}  // namespace su3
