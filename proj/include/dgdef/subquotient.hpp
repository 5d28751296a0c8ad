#ifndef DGDEF_SUBQUOTIENT_HPP
#define DGDEF_SUBQUOTIENT_HPP

#include <optional>
#include <vector>

#include "dgdef/matrix.hpp"

namespace dgdef {

// A subquotient Z/B of an ambient coordinate space: representative vectors for
// a basis of the quotient, an echelon basis of the relation space B, and a
// classifying map sending a vector of Z to its coordinates over the
// representatives. The classifying map vanishes exactly on B.
//
// Representatives are echelon-canonical lifts: generators of Z are reduced in
// order against B and previously accepted representatives, and the first
// surviving residues (normalized) become the basis.
template <class K>
class Subquotient {
  int ambient_ = 0;
  std::vector<Vec<K>> reps_;
  RowSpace<K> relations_;
  RowSpace<K> full_;  // relations + reps

 public:
  Subquotient() = default;

  Subquotient(int ambient, const std::vector<Vec<K>>& sub_gens,
              const std::vector<Vec<K>>& rel_gens)
      : ambient_(ambient), relations_(ambient), full_(ambient) {
    relations_.insert_all(rel_gens);
    full_.insert_all(rel_gens);
    RowSpace<K> sub(ambient);
    sub.insert_all(rel_gens);  // relations must lie inside the subspace span
    for (const auto& g : sub_gens) sub.insert(g);
    for (const auto& g : rel_gens)
      internal_check(sub.contains(g), "subquotient: relations outside subspace");
    for (const auto& g : sub.rows()) {
      Vec<K> r = full_.reduce(g);
      if (vec_is_zero(r)) continue;
      // normalize leading coefficient to 1 for a canonical lift
      int p = 0;
      while (r[p] == K(0)) ++p;
      r = vec_scale(K(1) / r[p], r);
      reps_.push_back(r);
      full_.insert(r);
    }
  }

  int ambient() const { return ambient_; }
  int dim() const { return (int)reps_.size(); }
  const std::vector<Vec<K>>& representatives() const { return reps_; }
  const std::vector<Vec<K>>& relation_basis() const { return relations_.rows(); }
  int relation_dim() const { return relations_.dim(); }

  // Coordinates of [v] over the representatives; nullopt if v is not in Z.
  std::optional<Vec<K>> classify(const Vec<K>& v) const {
    internal_check((int)v.size() == ambient_, "classify: bad vector length");
    if (!full_.contains(v)) return std::nullopt;
    if (reps_.empty()) return Vec<K>{};
    // v = (relation part) + sum coords[j] * reps[j]; solve exactly
    std::vector<Vec<K>> cols;
    cols.reserve(relations_.dim() + reps_.size());
    for (const auto& r : relations_.rows()) cols.push_back(r);
    for (const auto& r : reps_) cols.push_back(r);
    Matrix<K> m = Matrix<K>::from_cols(cols, ambient_);
    LinearSolution<K> sol = solve_linear(m, v);
    internal_check(sol.solvable, "classify: membership said yes but solve failed");
    Vec<K> coords(reps_.size());
    for (size_t j = 0; j < reps_.size(); ++j)
      coords[j] = sol.particular[relations_.dim() + j];
    return coords;
  }

  bool is_zero_class(const Vec<K>& v) const { return relations_.contains(v); }

  // Canonical representative of the class of v (reduce modulo relations only).
  Vec<K> canonical_rep(const Vec<K>& v) const {
    auto c = classify(v);
    internal_check(c.has_value(), "canonical_rep: vector not in the subspace");
    Vec<K> r(ambient_, K(0));
    for (size_t j = 0; j < reps_.size(); ++j) vec_axpy(r, (*c)[j], reps_[j]);
    return r;
  }
};

// ker(d_out) / im(d_in) with exactness check d_out . d_in = 0.
// d_in maps into the ambient space (ambient = d_in.rows() = d_out.cols()).
template <class K>
Subquotient<K> cohomology_at(const Matrix<K>& d_in, const Matrix<K>& d_out) {
  internal_check(d_in.rows() == d_out.cols(), "cohomology_at: ambient dims differ");
  if (!(d_out * d_in).is_zero())
    throw PreconditionError("cohomology_at: d_out . d_in != 0 (broken differential upstream)");
  std::vector<Vec<K>> cycles = kernel_basis(d_out);
  std::vector<Vec<K>> boundaries;
  for (int j = 0; j < d_in.cols(); ++j) boundaries.push_back(d_in.col(j));
  Subquotient<K> h(d_in.rows(), cycles, boundaries);
  internal_check(h.dim() == (int)cycles.size() - rank(d_in),
                 "cohomology_at: dim H != nullity - rank");
  return h;
}

}  // namespace dgdef

#endif
