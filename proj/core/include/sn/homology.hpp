#pragma once

#include <string>
#include <vector>

#include "sn/element.hpp"
#include "sn/linalg.hpp"

namespace sn {

/// A basis vector of a truncated space: the summand it belongs to, the
/// monomial (or sector-vector) tag, and its filtration degree.
struct BasisLabel {
  std::vector<int> component;
  std::string tag;
  unsigned degree = 0;
};

/// spaces[0] -> spaces[1] -> ... ; maps[k] has rows = |spaces[k+1]| and
/// cols = |spaces[k]|.
struct TruncatedComplex {
  std::string name;
  unsigned truncation = 0;
  std::vector<std::string> space_names;
  std::vector<std::vector<BasisLabel>> spaces;
  /// Degree bound of each space.
  std::vector<unsigned> bounds;
  std::vector<SparseMatrix> maps;
  bool tag_diagonal = false;
};

struct ExactnessReport {
  std::size_t position = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  std::size_t dim = 0;
  long homology_dim = 0;
  bool window_caveat = false;
};

/// 0 -> I_n -> ... -> I_1 -> a_n -> 0 truncated at degree d; spaces are
/// ordered [I_n, ..., I_1, I_0 = a_n].
TruncatedComplex build_anres(int n, unsigned d);

/// Koszul complex of right multiplication by s_i = y_i - lambda_i on S_n;
/// K_k is truncated at degree d - k; spaces are ordered [K_n, ..., K_0].
TruncatedComplex build_koszul_Mlambda(int n, const std::vector<Rational>& lambda, unsigned d);

/// maps[k+1] * maps[k] == 0 for all k.
bool check_d_squared(const TruncatedComplex& c);

/// Exact homology per tag component; requires a tag-diagonal complex.
std::vector<ExactnessReport> check_tag_diagonal_exactness(const TruncatedComplex& c);
/// Global ranks on the truncation; positions touching the boundary are
/// flagged with window_caveat.
std::vector<ExactnessReport> check_windowed_exactness(const TruncatedComplex& c);

/// The f in F with (y - lambda) f = g (rank 1).
Element f_block_inverse(const Rational& lambda, const Element& g);

struct CokerResult {
  Rational scalar;
  Element certificate;
};
/// Class of a in S_1/(y - lambda)S_1 = K with a - scalar = (y - lambda) cert.
CokerResult coker_principal_left(const Rational& lambda, const Element& a);

enum class SplitKind { PnSummand, FnColumn };
/// Verifies the projective splittings on the degree-d truncation.
bool check_projective_split(SplitKind which, int n, unsigned d);

/// True when no f in F_{<=d} satisfies E_ij (f - 1) = 0 for all i, j <= d.
bool nonsplit_witness_F(int n, unsigned d);

/// Matrix as "row col num/den" lines.
std::string to_triplets(const SparseMatrix& m);

}  // namespace sn
