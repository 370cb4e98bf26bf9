#pragma once

#include <string>
#include <vector>

#include "lgpot/errors.hpp"

namespace lgpot {

enum class DynkinType { A, B, C, D, E6, E7 };

const char* to_string(DynkinType t);

using IntMatrix = std::vector<std::vector<int>>;

/// Cartan matrix of a simple Lie type, Bourbaki node numbering (1-based;
/// the branch node of E6/E7 is node 2).
///
/// Convention: cartan[i][j] (0-based storage for 1-based nodes i+1, j+1)
/// holds the pairing of the simple root alpha_{j+1} against the coroot of
/// alpha_{i+1}.  Column j of the matrix is therefore the simple root
/// alpha_{j+1} written in fundamental-weight coordinates, which makes the
/// simple reflection s_i(mu) = mu - mu[i] * column_i a one-line formula.
struct CartanData {
  DynkinType type;
  int rank;
  IntMatrix cartan;

  bool operator==(const CartanData&) const = default;
};

/// Catalog Cartan matrix.  Valid ranks: A n>=1, B/C n>=2, D n>=3, E6/E7
/// exactly 6/7.  Throws UnsupportedType otherwise.
CartanData cartan_matrix(DynkinType type, int rank);

/// Langlands dual: transposed Cartan matrix, B_n <-> C_n, A/D/E unchanged.
/// Involution on the catalog; node indices are preserved.
CartanData langlands_dual(const CartanData& c);

/// True if (type, rank, k) appears in the cominuscule column of the
/// classification: (A_n, any k), (B_n, 1), (C_n, n), (D_n, 1), (D_n, n-1),
/// (D_n, n), (E6, 1 or 6), (E7, 7).
bool is_cominuscule_node(DynkinType type, int rank, int k);

enum class Family {
  Grassmannian,
  OddQuadric,
  EvenQuadric,
  LagrangianGrassmannian,
  OrthogonalGrassmannian,
  CayleyPlane,
  Freudenthal,
};

/// One of the cominuscule homogeneous spaces.  Construct through the named
/// factories; invalid parameters throw InvalidParameters.
struct CominusculeSpace {
  Family family;
  int k = 0; // Grassmannian subspace dimension, unused otherwise
  int n = 0; // family rank parameter, unused for E6/E7

  static CominusculeSpace grassmannian(int k, int n);
  /// Q_d for d >= 3, dispatching to OddQuadric (B_{(d+1)/2}) or
  /// EvenQuadric (D_{(d+2)/2}).
  static CominusculeSpace quadric(int dim);
  static CominusculeSpace odd_quadric(int n);  // Q_{2n-1}, type B_n
  static CominusculeSpace even_quadric(int n); // Q_{2n-2}, type D_n
  static CominusculeSpace lagrangian_grassmannian(int n);  // LG(n,2n), C_n
  static CominusculeSpace orthogonal_grassmannian(int n);  // OG(n,2n), D_n
  static CominusculeSpace cayley_plane(); // E6 / P_6
  static CominusculeSpace freudenthal();  // E7 / P_7

  /// Display label, e.g. "Gr(4,7)", "Q7", "LG(4,8)", "OG(5,10)",
  /// "CayleyPlane", "Freudenthal".
  std::string name() const;

  bool operator==(const CominusculeSpace&) const = default;
};

struct SpaceData {
  CartanData group; // Cartan data of G
  int k;            // marked cominuscule node
  int dim;          // dim X = length of w^P
};

/// Group type, marked node and dimension for a catalog space.
SpaceData space_data(const CominusculeSpace& s);

/// JSON text of the form {"type": "...", "rank": n, "cartan": [[...]], "k": k}.
std::string cartan_to_json(const CartanData& c, int k);

} // namespace lgpot
