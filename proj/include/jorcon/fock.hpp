#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jorcon/algebra.hpp"
#include "jorcon/matrix.hpp"

namespace jorcon {

// Two-mode Fock space. Bosonic states are |n1, n2> with n1 + n2 <= cutoff in
// the rescaled basis |n1,n2>/sqrt(n1! n2!), where a+|n> = |n+1> and
// a|n> = n|n-1>. Fermionic states use the Jordan-Wigner sign on mode 2.
struct FockSpace {
  Sigma stats = Sigma::Boson;
  int cutoff = 1;
  std::vector<std::pair<int, int>> states;  // lexicographic

  int dim() const { return static_cast<int>(states.size()); }
  int index(int n1, int n2) const;  // -1 if outside
  int total(int k) const { return states[k].first + states[k].second; }
};

FockSpace make_fock_space(Sigma stats, int cutoff);

struct FockOps {
  FockSpace space;
  std::map<std::string, LabeledMatrix> ops;
  Scalar h;  // deformation parameter of the realization

  const LabeledMatrix& operator[](const std::string& name) const { return ops.at(name); }
};

// a+1, a+2, a1, a2, J+, J-, J0.
FockOps build_classical_ops(Sigma stats, int cutoff);
// A+1, A+2, At1, At2 (plus the classical operators they are built from).
FockOps build_aizawa(Sigma stats, int cutoff, const Scalar& h = Scalar::h());

struct FockResidual {
  std::string relation;
  int nonzero = 0;  // nonzero residual entries on the checked columns
  bool ok() const { return nonzero == 0; }
};

struct FockReport {
  Sigma stats = Sigma::Boson;
  Basis basis = Basis::Tilde;
  int cutoff = 0;
  int max_total = 0;  // columns checked have total number <= max_total
  int dim = 0;
  std::vector<FockResidual> residuals;
  bool ok() const;
};

// Substitutes the operators into every relation of `rel` (a (2,1) h-family
// set) and checks that the result vanishes on states of total number at
// most cutoff - safe_margin; fermions are checked on the full space. In the
// plain basis the annihilators are A1 = h At1 - At2, A2 = At1.
FockReport verify_on_fock(const RelationSet& rel, const FockOps& ops, int safe_margin = 2);

} // namespace jorcon
