#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ckq/scalars.hpp"
#include "ckq/tensoralg.hpp"

namespace ckq {

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Names one group SO_v(N; j; sigma).
struct GroupSpec {
  int N = 3;
  std::vector<int> sigma;  // sigma[i-1] = sigma_i
  CKAssignment j;          // length N-1

  int n() const { return N / 2; }
  int prime(int k) const { return N + 1 - k; }
  int nparams() const { return N - 1; }
  int sig(int i) const { return sigma.at(i - 1); }
  IndexSet nilpotent() const { return j.nilpotent(); }

  /// Throws InvalidSpec.
  void validate() const;
  static GroupSpec make(int N, std::vector<int> sigma, CKAssignment j);
  /// All parameters formal.
  static GroupSpec formal(int N, std::vector<int> sigma);
  /// Nilpotent on S, unit elsewhere.
  static GroupSpec contracted(int N, std::vector<int> sigma, IndexSet S);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::vector<int> identity_perm(int N);
/// Position of value x in sigma (1-based).
int sigma_inverse(const GroupSpec& spec, int x);

/// 2*rho_k for k = 1..N; entries are integers for both parities.
std::vector<int> rho2(int N);
std::vector<Rational> rho(int N);

/// (k,p) = prod_{l=min}^{max-1} j_l, as a monomial in j_1..j_{N-1}.
ParamMonomial range_product(int k, int p, int N);
/// Squarefree union of (sigma_k, sigma_k') over k = 1..n.
ParamMonomial J_of(const GroupSpec& spec);

/// Entry (i,k) = (sigma_i, sigma_k) u_{sigma_i sigma_k}, formal parameters.
PolyMatrix generating_matrix(const GroupSpec& spec);

/// (D, D^{-1}). D^{-1} is unitary, so D is its conjugate transpose.
std::pair<NumMatrix, NumMatrix> d_matrix(int N);

struct CMatrices {
  ScalarMatrix c0;
  ScalarMatrix c;
  ScalarMatrix c_inv;
  ScalarMatrix ctilde;
  ScalarMatrix ctilde_inv;
};

CMatrices c_matrices(const GroupSpec& spec);

/// Cartesian R-matrix, N^2 x N^2, entries Laurent polynomials in t (q = t^2).
ScalarMatrix r_tilde(const GroupSpec& spec);
/// Symplectic-basis R-matrix of SO_q(N), used only as a cross-check.
ScalarMatrix r_symplectic(int N, int nparams);
/// (D x D)^{-1} R (D x D), the conjugated symplectic R-matrix.
ScalarMatrix r_tilde_conjugated(const GroupSpec& spec);

ScalarMatrix to_scalar(const NumMatrix& m, int nparams);
/// Flip matrix P(a (x) b) = b (x) a on C^N (x) C^N.
ScalarMatrix flip_matrix(int N, int nparams);

struct YbeResult {
  bool ok = true;
  std::string detail;  // first failing entry as (i1 i2 i3 | k1 k2 k3) and point
};

/// R12 R13 R23 = R23 R13 R12 at each point, exact arithmetic.
YbeResult check_yang_baxter(const ScalarMatrix& r, int N, const std::vector<Point>& points);

std::string param_name(Param p);
Param parse_param(const std::string& s);
std::string spec_to_json(const GroupSpec& spec);
/// Accepts {"n": N, "sigma": [...], "j": [...]}; throws InvalidSpec.
GroupSpec spec_from_json(const std::string& text);

}  // namespace ckq
