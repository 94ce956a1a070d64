#pragma once

// Groebner bases over Q: Buchberger with Gebauer-Moeller pair pruning and
// sugar selection, plus the ideal operations built on elimination.

#include <chrono>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "su3/poly.hpp"

namespace su3 {

struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  /// Block orders: the first `block` variables are eliminated (grevlex inside
  /// each block).
  std::size_t block = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder eliminate(std::size_t k) { return {Kind::Block, k}; }
  /// "grevlex", "lex" or "block:<k>".
  static MonomialOrder parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind != b.kind ? a.kind < b.kind : a.block < b.block;
  }
};

/// Time and resident-memory caps for one Groebner computation.
struct Budget {
  std::chrono::milliseconds time = std::chrono::minutes(30);
  std::size_t memory_bytes = std::size_t{4} << 30;

  static Budget minutes(double m, std::size_t mib = 4096);
};

struct GroebnerStats {
  std::size_t pairs_processed = 0;
  std::size_t pairs_pruned = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_basis_size = 0;
  bool homogeneous = false;
  double seconds = 0;
};

/// Reduced, monic Groebner basis sorted by decreasing leading monomial.
/// Throws ResourceBudgetExceeded.
std::vector<Poly> buchberger(const std::vector<Poly>& gens, const MonomialOrder& order,
                             const Budget& budget = {}, GroebnerStats* stats = nullptr);

/// Remainder of f modulo a Groebner basis (any basis works, unique for reduced ones).
Poly normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order);

/// Leading monomial of f under `order`.
Monomial leading_monomial(const Poly& f, const MonomialOrder& order);

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return generators_; }

  /// Reduced basis for `order`, computed once and cached.
  const std::vector<Poly>& groebner_basis(const MonomialOrder& order = {},
                                          const Budget& budget = {}) const;
  bool is_unit(const Budget& budget = {}) const;
  bool contains(const Poly& f, const Budget& budget = {}) const;

 private:
  RingPtr ring_;
  std::vector<Poly> generators_;
  struct Cache {
    std::mutex mutex;
    std::map<MonomialOrder, std::vector<Poly>> bases;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Q : <f>, via Q ∩ <f> from eliminating t in <t*Q, (1-t)*f>, divided by f.
Ideal ideal_quotient_principal(const Ideal& q, const Poly& f, const Budget& budget = {});
/// I : f^infinity via I + <1 - y*f> with y eliminated.
Ideal saturate(const Ideal& ideal, const Poly& f, const Budget& budget = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order = {},
                 const Budget& budget = {});

}  // namespace su3
