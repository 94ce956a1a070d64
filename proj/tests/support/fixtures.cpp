#include "fixtures.hpp"

#include <cstdlib>

#include "su3/matrix.hpp"

namespace su3::test {

std::uint64_t test_seed() {
  if (const char* s = std::getenv("SU3_TEST_SEED")) return std::strtoull(s, nullptr, 10);
  return kDefaultSeed;
}

Pair flat_model() {
  return {"flat", parse_form("e^{1,2} + e^{3,4} + e^{5,6}"),
          parse_form("e^{1,3,5} - e^{1,4,6} - e^{2,3,6} - e^{2,4,5}")};
}

Pair example_double() {
  return {"double", parse_form("-e^{1,4} - e^{2,5} - e^{3,6}"),
          parse_form("1/2*sqrt(2)*e^{1,2,3} - 1/2*sqrt(2)*e^{1,5,6} + 1/2*sqrt(2)*e^{2,4,6} - 1/2*sqrt(2)*e^{3,4,5}"
                     " + 1/2*sqrt(2)*e^{1,2,6} - 1/2*sqrt(2)*e^{1,3,5} + 1/2*sqrt(2)*e^{2,3,4} - 1/2*sqrt(2)*e^{4,5,6}")};
}

Pair example_nearly_kahler() {
  return {"nearly_kahler", parse_form("-1/18*sqrt(3)*e^{1,4} - 1/18*sqrt(3)*e^{2,5} - 1/18*sqrt(3)*e^{3,6}"),
          parse_form("-1/54*sqrt(3)*e^{2,3,4} + 1/54*sqrt(3)*e^{1,5,6} + 1/54*sqrt(3)*e^{1,3,5}"
                     " - 1/54*sqrt(3)*e^{2,4,6} - 1/54*sqrt(3)*e^{1,2,6} + 1/54*sqrt(3)*e^{3,4,5}")};
}

Scalar fourth_root_3() { return Scalar(BigFloat(3, default_digits()).root(4)); }

Scalar jensen_example_coefficient() {
  const int digits = default_digits();
  return Scalar(BigFloat(4, digits).root(3) * BigFloat(3, digits).root(6) / BigFloat(2, digits));
}

Pair example_half_flat() {
  const Scalar k = jensen_example_coefficient();
  return {"half_flat", k * parse_form("-e^{1,4} + e^{2,5} + e^{3,6}"),
          parse_form("e^{1,2,3} + e^{1,3,5} - e^{2,4,6} - e^{1,2,6} + e^{3,4,5} - e^{4,5,6}")};
}

Pair example_coupled() {
  const Scalar q = fourth_root_3();
  return {"coupled", parse_form("-sqrt(3)*e^{1,6} - e^{2,4} - e^{2,5} - e^{3,5}"),
          q * parse_form("-sqrt(3)*e^{2,3,6} + sqrt(3)*e^{1,4,5} + e^{1,3,4} + e^{2,5,6} + e^{1,3,5}"
                         " - e^{2,4,6} - e^{1,2,5} - e^{3,4,6}")};
}

namespace {

const char* const kDet =
    "a14*a25*a36 - a14*a26*a35 - a15*a24*a36 + a15*a26*a34 + a16*a24*a35 - a16*a25*a34";

}  // namespace

const std::map<std::pair<int, int>, std::string>& h_tilde_reference() {
  static const std::map<std::pair<int, int>, std::string> entries = {
    {{1, 1}, std::string("-2*c^2*(") + kDet + ")"},
    {{1, 4}, "-c^2*(a14^3 + a14*a15^2 + a14*a16^2 + a14*a24^2 - a14*a25^2 - a14*a26^2 + a14*a34^2 - a14*a35^2"
             " - a14*a36^2 + 2*a15*a24*a25 + 2*a15*a34*a35 + 2*a16*a24*a26 + 2*a16*a34*a36)"},
    {{1, 5}, "-c^2*(a14^2*a15 + 2*a14*a24*a25 + 2*a14*a34*a35 + a15^3 + a15*a16^2 - a15*a24^2 + a15*a25^2"
             " - a15*a26^2 - a15*a34^2 + a15*a35^2 - a15*a36^2 + 2*a16*a25*a26 + 2*a16*a35*a36)"},
    {{1, 6}, "-c^2*(a14^2*a16 + 2*a14*a24*a26 + 2*a14*a34*a36 + a15^2*a16 + 2*a15*a25*a26 + 2*a15*a35*a36"
             " + a16^3 - a16*a24^2 - a16*a25^2 + a16*a26^2 - a16*a34^2 - a16*a35^2 + a16*a36^2)"},
    {{2, 4}, "-c^2*(a14^2*a24 + 2*a14*a15*a25 + 2*a14*a16*a26 - a15^2*a24 - a16^2*a24 + a24^3 + a24*a25^2"
             " + a24*a26^2 + a24*a34^2 - a24*a35^2 - a24*a36^2 + 2*a25*a34*a35 + 2*a26*a34*a36)"},
    {{2, 5}, "c^2*(a14^2*a25 - 2*a14*a15*a24 - a15^2*a25 - 2*a15*a16*a26 + a16^2*a25 - a24^2*a25"
             " - 2*a24*a34*a35 - a25^3 - a25*a26^2 + a25*a34^2 - a25*a35^2 + a25*a36^2 - 2*a26*a35*a36)"},
    {{2, 6}, "c^2*(a14^2*a26 - 2*a14*a16*a24 + a15^2*a26 - 2*a15*a16*a25 - a16^2*a26 - a24^2*a26"
             " - 2*a24*a34*a36 - a25^2*a26 - 2*a25*a35*a36 - a26^3 + a26*a34^2 + a26*a35^2 - a26*a36^2)"},
    {{3, 4}, "-c^2*(a14^2*a34 + 2*a14*a15*a35 + 2*a14*a16*a36 - a15^2*a34 - a16^2*a34 + a24^2*a34"
             " + 2*a24*a25*a35 + 2*a24*a26*a36 - a25^2*a34 - a26^2*a34 + a34^3 + a34*a35^2 + a34*a36^2)"},
    {{3, 5}, "c^2*(a14^2*a35 - 2*a14*a15*a34 - a15^2*a35 - 2*a15*a16*a36 + a16^2*a35 + a24^2*a35"
             " - 2*a24*a25*a34 - a25^2*a35 - 2*a25*a26*a36 + a26^2*a35 - a34^2*a35 - a35^3 - a35*a36^2)"},
    {{3, 6}, "c^2*(a14^2*a36 - 2*a14*a16*a34 + a15^2*a36 - 2*a15*a16*a35 - a16^2*a36 + a24^2*a36"
             " - 2*a24*a26*a34 + a25^2*a36 - 2*a25*a26*a35 - a26^2*a36 - a34^2*a36 - a35^2*a36 - a36^3)"},
};
  return entries;
}

Rational Rng::rational(long bound) {
  Rational q(integer(-bound, bound), integer(1, 3));
  q.canonicalize();
  return q;
}

Form random_form(Rng& rng, int degree, unsigned density_percent) {
  Form f(degree);
  for (const auto& w : words_of_degree(degree)) {
    if (rng.chance(density_percent)) f.add(w, Scalar(rng.rational(3)));
  }
  return f;
}

ScalarMatrix random_unimodular(Rng& rng) {
  ScalarMatrix upper = ScalarMatrix::identity(kDim), lower = ScalarMatrix::identity(kDim);
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i + 1; j < kDim; ++j) {
      upper(i, j) = Scalar(rng.integer(-1, 1));
      lower(j, i) = Scalar(rng.integer(-1, 1));
    }
  }
  return upper * lower;
}

Form pullback(const ScalarMatrix& a, const Form& f) {
  std::array<Form, kDim> images;
  for (std::size_t i = 0; i < kDim; ++i) {
    Form img(1);
    for (std::size_t j = 0; j < kDim; ++j) img.add(IndexWord::of({static_cast<int>(j + 1)}), a(i, j));
    images[i] = img;
  }
  Form out(f.degree());
  for (const auto& [w, c] : f.terms()) {
    Form term = Form::basis(IndexWord::of(std::vector<int>{}), c);
    for (int i : w.indices()) term = wedge(term, images[static_cast<std::size_t>(i - 1)]);
    out = out + term;
  }
  return out;
}

LieAlgebra transport(const LieAlgebra& algebra, const ScalarMatrix& a) {
  const auto inv = inverse(a);
  if (!inv) throw SingularMetric("transport needs an invertible matrix");
  std::array<Form, kDim> de;
  for (std::size_t i = 0; i < kDim; ++i) {
    Form back(2);
    for (std::size_t j = 0; j < kDim; ++j) back = back + (*inv)(i, j) * algebra.de(static_cast<int>(j + 1));
    de[i] = pullback(a, back);
  }
  return LieAlgebra(algebra.name() + "_transported", de);
}

}  // namespace su3::test
