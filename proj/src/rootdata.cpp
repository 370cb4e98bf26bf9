#include "lgpot/rootdata.hpp"

#include <json.hpp>

#include <sstream>

namespace lgpot {

const char* to_string(DynkinType t) {
  switch (t) {
    case DynkinType::A: return "A";
    case DynkinType::B: return "B";
    case DynkinType::C: return "C";
    case DynkinType::D: return "D";
    case DynkinType::E6: return "E6";
    case DynkinType::E7: return "E7";
  }
  return "?";
}

namespace {

void check_rank(DynkinType t, int n) {
  bool ok = false;
  switch (t) {
    case DynkinType::A: ok = n >= 1; break;
    case DynkinType::B:
    case DynkinType::C: ok = n >= 2; break;
    case DynkinType::D: ok = n >= 3; break;
    case DynkinType::E6: ok = n == 6; break;
    case DynkinType::E7: ok = n == 7; break;
  }
  if (!ok) {
    std::ostringstream msg;
    msg << "no " << to_string(t) << "_" << n << " in the catalog";
    throw UnsupportedType(msg.str());
  }
}

// 1-based simple edge
void edge(IntMatrix& a, int i, int j) {
  a[i - 1][j - 1] = -1;
  a[j - 1][i - 1] = -1;
}

} // namespace

CartanData cartan_matrix(DynkinType type, int rank) {
  check_rank(type, rank);
  const int n = rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;

  switch (type) {
    case DynkinType::A:
      for (int i = 1; i < n; ++i) edge(a, i, i + 1);
      break;
    case DynkinType::B:
      // alpha_n short: <alpha_n, alpha_{n-1}^v> = -1, <alpha_{n-1}, alpha_n^v> = -2
      for (int i = 1; i + 1 < n; ++i) edge(a, i, i + 1);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      break;
    case DynkinType::C:
      // transpose of B_n
      for (int i = 1; i + 1 < n; ++i) edge(a, i, i + 1);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      break;
    case DynkinType::D:
      for (int i = 1; i + 2 < n; ++i) edge(a, i, i + 1);
      edge(a, n - 2, n - 1);
      edge(a, n - 2, n);
      break;
    case DynkinType::E6:
      for (auto [i, j] : {std::pair{1, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}})
        edge(a, i, j);
      break;
    case DynkinType::E7:
      for (auto [i, j] :
           {std::pair{1, 3}, {3, 4}, {4, 2}, {4, 5}, {5, 6}, {6, 7}})
        edge(a, i, j);
      break;
  }
  return CartanData{type, rank, std::move(a)};
}

CartanData langlands_dual(const CartanData& c) {
  DynkinType t = c.type;
  if (t == DynkinType::B) t = DynkinType::C;
  else if (t == DynkinType::C) t = DynkinType::B;
  const int n = c.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = c.cartan[j][i];
  return CartanData{t, n, std::move(a)};
}

bool is_cominuscule_node(DynkinType type, int rank, int k) {
  if (k < 1 || k > rank) return false;
  switch (type) {
    case DynkinType::A: return true;
    case DynkinType::B: return k == 1;
    case DynkinType::C: return k == rank;
    case DynkinType::D: return k == 1 || k == rank - 1 || k == rank;
    case DynkinType::E6: return k == 1 || k == 6;
    case DynkinType::E7: return k == 7;
  }
  return false;
}

CominusculeSpace CominusculeSpace::grassmannian(int k, int n) {
  if (n < 2 || k < 1 || k > n - 1)
    throw InvalidParameters("Gr(k,n) needs 1 <= k <= n-1");
  return {Family::Grassmannian, k, n};
}

CominusculeSpace CominusculeSpace::odd_quadric(int n) {
  if (n < 2) throw InvalidParameters("odd quadric needs rank n >= 2");
  return {Family::OddQuadric, 0, n};
}

CominusculeSpace CominusculeSpace::even_quadric(int n) {
  if (n < 3) throw InvalidParameters("even quadric needs rank n >= 3");
  return {Family::EvenQuadric, 0, n};
}

CominusculeSpace CominusculeSpace::quadric(int dim) {
  if (dim < 3) throw InvalidParameters("quadric needs dim >= 3");
  return dim % 2 ? odd_quadric((dim + 1) / 2) : even_quadric((dim + 2) / 2);
}

CominusculeSpace CominusculeSpace::lagrangian_grassmannian(int n) {
  if (n < 2) throw InvalidParameters("LG(n,2n) needs n >= 2");
  return {Family::LagrangianGrassmannian, 0, n};
}

CominusculeSpace CominusculeSpace::orthogonal_grassmannian(int n) {
  if (n < 3) throw InvalidParameters("OG(n,2n) needs n >= 3");
  return {Family::OrthogonalGrassmannian, 0, n};
}

CominusculeSpace CominusculeSpace::cayley_plane() {
  return {Family::CayleyPlane, 0, 6};
}

CominusculeSpace CominusculeSpace::freudenthal() {
  return {Family::Freudenthal, 0, 7};
}

std::string CominusculeSpace::name() const {
  std::ostringstream s;
  switch (family) {
    case Family::Grassmannian: s << "Gr(" << k << "," << n << ")"; break;
    case Family::OddQuadric: s << "Q" << (2 * n - 1); break;
    case Family::EvenQuadric: s << "Q" << (2 * n - 2); break;
    case Family::LagrangianGrassmannian:
      s << "LG(" << n << "," << 2 * n << ")";
      break;
    case Family::OrthogonalGrassmannian:
      s << "OG(" << n << "," << 2 * n << ")";
      break;
    case Family::CayleyPlane: s << "CayleyPlane"; break;
    case Family::Freudenthal: s << "Freudenthal"; break;
  }
  return s.str();
}

SpaceData space_data(const CominusculeSpace& s) {
  switch (s.family) {
    case Family::Grassmannian:
      return {cartan_matrix(DynkinType::A, s.n - 1), s.k, s.k * (s.n - s.k)};
    case Family::OddQuadric:
      return {cartan_matrix(DynkinType::B, s.n), 1, 2 * s.n - 1};
    case Family::EvenQuadric:
      return {cartan_matrix(DynkinType::D, s.n), 1, 2 * s.n - 2};
    case Family::LagrangianGrassmannian:
      return {cartan_matrix(DynkinType::C, s.n), s.n, s.n * (s.n + 1) / 2};
    case Family::OrthogonalGrassmannian:
      return {cartan_matrix(DynkinType::D, s.n), s.n, s.n * (s.n - 1) / 2};
    case Family::CayleyPlane:
      return {cartan_matrix(DynkinType::E6, 6), 6, 16};
    case Family::Freudenthal:
      return {cartan_matrix(DynkinType::E7, 7), 7, 27};
  }
  throw InvalidParameters("unknown space family");
}

std::string cartan_to_json(const CartanData& c, int k) {
  nlohmann::json j;
  j["type"] = to_string(c.type);
  j["rank"] = c.rank;
  j["cartan"] = c.cartan;
  j["k"] = k;
  return j.dump();
}

} // namespace lgpot
