#pragma once

#include "jorcon/algebra.hpp"
#include "jorcon/matrix.hpp"

namespace jorcon {

// q side. Variant 2 of the plain basis is built by the substitution
// R -> tau R^-1 tau on the variant 1 equations.
RelationSet compact_relations_q(int n, int m, Sigma sigma, int variant, Basis basis);
// Variant 2, plain basis, with the third equation written out directly
// (transposition in slot 2 at q^-1) instead of by substitution.
RelationSet compact_relations_q_v2_direct(int n, int m, Sigma sigma);
RelationSet componentwise_relations_q(int n, int m, Sigma sigma, int variant, Basis basis = Basis::Plain);

// h side.
RelationSet compact_relations_h(int n, int m, Sigma sigma, Basis basis);
// General (n, m) componentwise lists. A factor of dimension 1 is undeformed,
// so its parameter is set to zero unless `literal` is requested.
RelationSet componentwise_relations_h(int n, int m, Sigma sigma, Basis basis, bool literal = false);
// Simplified lists for m = 1, with the same n = 1 convention.
RelationSet componentwise_relations_h_m1(int n, Sigma sigma, Basis basis, bool literal = false);
// The explicit n = 2, m = 1 lists.
RelationSet explicit_relations_21(Sigma sigma, Basis basis);

// Undeformed (anti)commutation relations.
RelationSet classical_relations(int n, int m, Sigma sigma, Basis basis);

// A'+ = A''+ G^-1, A' = G A'', At' = At'' G^-1 with G = g (x) gm, followed by
// recombination of every block so that the double primed operators stand
// alone.
RelationSet transform_generators(const RelationSet& rel, const LabeledMatrix& g, const LabeledMatrix& gm);
// Uses g(eta) and gm(eta'); a dimension-1 factor keeps the identity.
RelationSet transform_generators(const RelationSet& rel);
// Coefficientwise q -> 1 limit; throws PoleAtQ1 naming the relation.
RelationSet contract_relations(const RelationSet& rel);
inline RelationSet contracted_relations(int n, int m, Sigma sigma, int variant, Basis basis) {
  return contract_relations(transform_generators(compact_relations_q(n, m, sigma, variant, basis)));
}

// h = h' = 0.
RelationSet specialize_classical(const RelationSet& rel);

struct StructureCoeffs {
  std::vector<int> d;
  std::vector<int> dm;
};
StructureCoeffs structure_coeffs(int n, int m);

std::string basis_name(Basis b);

} // namespace jorcon
