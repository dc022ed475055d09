#include "satake/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace satake {

namespace {

// Half squared lengths (alpha_i, alpha_i)/2 in the normalization where long
// roots of B/C/F have squared length 4, short roots 2; G2 short 2, long 6;
// simply laced all 2.
std::vector<int> half_lengths(SimpleType t) {
  std::vector<int> d(t.rank, 1);
  switch (t.letter) {
    case TypeLetter::A:
    case TypeLetter::D:
    case TypeLetter::E:
      break;
    case TypeLetter::B:
      for (int i = 0; i + 1 < t.rank; ++i) d[i] = 2;
      break;
    case TypeLetter::C:
      d[t.rank - 1] = 2;
      break;
    case TypeLetter::F:
      d[0] = d[1] = 2;
      break;
    case TypeLetter::G:
      d[1] = 3;
      break;
  }
  return d;
}

std::vector<int> height_order_key(const Eigen::VectorXi& v) {
  std::vector<int> key;
  key.push_back(v.sum());
  for (int i = 0; i < v.size(); ++i) key.push_back(v(i));
  return key;
}

bool same_vector(const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

}  // namespace

Diagram dynkin_diagram(SimpleType t) {
  if (make_type(t.letter, t.rank) != t) {
    throw contract_error("dynkin_diagram requires a canonical type");
  }
  Diagram d;
  for (int i = 1; i <= t.rank; ++i) add_node(d, "a" + std::to_string(i));
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) {
      add_edge(d, "a" + std::to_string(i), "a" + std::to_string(i + 1));
    }
  };
  const int n = t.rank;
  switch (t.letter) {
    case TypeLetter::A:
      chain(1, n);
      break;
    case TypeLetter::B:
      chain(1, n - 1);
      add_edge(d, "a" + std::to_string(n - 1), "a" + std::to_string(n), 2,
               "a" + std::to_string(n));
      break;
    case TypeLetter::C:
      chain(1, n - 1);
      add_edge(d, "a" + std::to_string(n - 1), "a" + std::to_string(n), 2,
               "a" + std::to_string(n - 1));
      break;
    case TypeLetter::D:
      chain(1, n - 1);
      add_edge(d, "a" + std::to_string(n - 2), "a" + std::to_string(n));
      break;
    case TypeLetter::E:
      // Bourbaki: chain a1-a3-a4-a5-...-an, with a2 attached to a4.
      add_edge(d, "a1", "a3");
      chain(3, n);
      add_edge(d, "a2", "a4");
      break;
    case TypeLetter::F:
      add_edge(d, "a1", "a2");
      add_edge(d, "a2", "a3", 2, "a3");
      add_edge(d, "a3", "a4");
      break;
    case TypeLetter::G:
      add_edge(d, "a1", "a2", 3, "a1");
      break;
  }
  return d;
}

RootSystem build_root_system(SimpleType t) {
  if (make_type(t.letter, t.rank) != t) {
    throw contract_error("build_root_system requires a canonical type");
  }
  const int n = t.rank;
  RootSystem rs;
  rs.type = t;

  const std::vector<int> d = half_lengths(t);
  const Diagram dd = dynkin_diagram(t);
  rs.bilinear = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) rs.bilinear(i, i) = 2 * d[i];
  for (const DiagramEdge& e : dd.edges) {
    const int val = -std::max(d[e.u], d[e.v]);
    rs.bilinear(e.u, e.v) = val;
    rs.bilinear(e.v, e.u) = val;
  }
  rs.cartan = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      rs.cartan(i, j) = rs.bilinear(i, j) / d[j];
    }
  }

  // Positive roots by string closure, level by level in height. beta + alpha_i
  // is a root iff p - <beta, alpha_i^vee> > 0 where p is the length of the
  // alpha_i-string below beta.
  std::set<std::vector<int>> found;
  std::vector<Eigen::VectorXi> current;
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Zero(n);
    e(i) = 1;
    current.push_back(e);
    found.insert(std::vector<int>(e.data(), e.data() + n));
  }
  std::vector<Eigen::VectorXi> all = current;
  while (!current.empty()) {
    std::vector<Eigen::VectorXi> next;
    for (const Eigen::VectorXi& beta : current) {
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXi cand = beta;
        cand(i) += 1;
        if (cand(i) == 2 && beta.sum() == 1) continue;  // 2*alpha_i
        std::vector<int> cv(cand.data(), cand.data() + n);
        if (found.count(cv)) continue;
        int p = 0;
        Eigen::VectorXi down = beta;
        while (true) {
          down(i) -= 1;
          if (down(i) < 0) break;
          if (down.sum() == 0) break;  // reached zero, not a root
          std::vector<int> dv(down.data(), down.data() + n);
          if (!found.count(dv)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta(j) * rs.cartan(j, i);
        if (p - pairing > 0) {
          found.insert(cv);
          next.push_back(cand);
          all.push_back(cand);
        }
      }
    }
    current = std::move(next);
  }
  std::sort(all.begin(), all.end(),
            [](const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
              return height_order_key(a) < height_order_key(b);
            });
  rs.positive_roots = std::move(all);
  rs.highest_root = rs.positive_roots.back();
  for (const Eigen::VectorXi& beta : rs.positive_roots) {
    if (beta.sum() == rs.highest_root.sum() &&
        !same_vector(beta, rs.highest_root)) {
      throw contract_error("highest root is not unique");
    }
  }
  return rs;
}

int simple_pairing(const RootSystem& rs, const Eigen::VectorXi& beta, int i) {
  int v = 0;
  for (int j = 0; j < rs.rank(); ++j) v += beta(j) * rs.cartan(j, i);
  return v;
}

int cartan_integer(const RootSystem& rs, const Eigen::VectorXi& beta,
                   const Eigen::VectorXi& gamma) {
  long long num = 2LL * (beta.transpose() * rs.bilinear * gamma)(0, 0);
  long long den = (gamma.transpose() * rs.bilinear * gamma)(0, 0);
  if (den == 0 || num % den != 0) {
    throw contract_error("pairing is not an exact Cartan integer");
  }
  return static_cast<int>(num / den);
}

Diagram extended_diagram(SimpleType t) {
  const RootSystem rs = build_root_system(t);
  Diagram d = dynkin_diagram(t);
  for (int i = 0; i < t.rank; ++i) d.marks[i] = rs.highest_root(i);
  add_node(d, "g", 1);
  if (t.letter == TypeLetter::A && t.rank == 1) {
    // The affine bond between the two equal-length nodes is drawn as a
    // multiplicity-2 edge without direction.
    add_edge(d, "g", "a1", 2);
    return d;
  }
  const Eigen::VectorXi& theta = rs.highest_root;
  const long long theta_sq =
      (theta.transpose() * rs.bilinear * theta)(0, 0);
  for (int i = 0; i < t.rank; ++i) {
    const int a_gamma_i = -simple_pairing(rs, theta, i);
    long long alpha_dot_theta = 0;
    for (int j = 0; j < t.rank; ++j) {
      alpha_dot_theta += static_cast<long long>(rs.bilinear(i, j)) * theta(j);
    }
    const long long a_i_gamma = -2 * alpha_dot_theta / theta_sq;
    const int mult = static_cast<int>(a_gamma_i * a_i_gamma);
    if (mult == 0) continue;
    std::string short_end;
    const long long alpha_sq = rs.bilinear(i, i);
    if (alpha_sq < theta_sq) {
      short_end = "a" + std::to_string(i + 1);
    } else if (alpha_sq > theta_sq) {
      short_end = "g";
    }
    add_edge(d, "g", "a" + std::to_string(i + 1), mult, short_end);
  }
  return d;
}

std::vector<SimpleType> identify(
    const RootSystem& rs, const std::vector<Eigen::VectorXi>& simple_system) {
  Diagram d;
  for (std::size_t i = 0; i < simple_system.size(); ++i) {
    add_node(d, "s" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < simple_system.size(); ++i) {
    for (std::size_t j = i + 1; j < simple_system.size(); ++j) {
      const int aij = cartan_integer(rs, simple_system[i], simple_system[j]);
      const int aji = cartan_integer(rs, simple_system[j], simple_system[i]);
      if (aij > 0 || aji > 0) {
        throw contract_error("not a simple system: positive pairing");
      }
      const int mult = aij * aji;
      if (mult == 0) continue;
      if (mult > 3) throw contract_error("not a simple system: bond too wide");
      std::string short_end;
      const long long sq_i =
          (simple_system[i].transpose() * rs.bilinear * simple_system[i])(0, 0);
      const long long sq_j =
          (simple_system[j].transpose() * rs.bilinear * simple_system[j])(0, 0);
      if (sq_i < sq_j) short_end = "s" + std::to_string(i + 1);
      if (sq_j < sq_i) short_end = "s" + std::to_string(j + 1);
      add_edge(d, "s" + std::to_string(i + 1), "s" + std::to_string(j + 1),
               mult, short_end);
    }
  }
  std::vector<SimpleType> types;
  for (const SatakeDiagram& comp : components(monochrome(d, false))) {
    types.push_back(classify_shape(comp.base));
  }
  std::sort(types.begin(), types.end());
  return types;
}

int integer_matrix_rank(Eigen::MatrixXi m_in) {
  // Bareiss fraction-free elimination over long long.
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> m =
      m_in.cast<long long>();
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int rank = 0;
  long long prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) continue;
    m.row(pivot).swap(m.row(rank));
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / prev;
      }
      m(r, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

Subsystem centralizer_subsystem(const RootSystem& rs,
                                const Eigen::VectorXi& exponents,
                                int modulus) {
  if (exponents.size() != rs.rank()) {
    throw contract_error("exponent vector has wrong dimension");
  }
  if (modulus <= 0) throw contract_error("modulus must be positive");
  Subsystem sub;
  for (const Eigen::VectorXi& beta : rs.positive_roots) {
    long long v = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      v += static_cast<long long>(exponents(i)) * beta(i);
    }
    if (((v % modulus) + modulus) % modulus == 0) sub.roots.push_back(beta);
  }
  // A member is simple in the subsystem iff it is not the sum of two others.
  std::set<std::vector<int>> member_set;
  for (const Eigen::VectorXi& beta : sub.roots) {
    member_set.insert(std::vector<int>(beta.data(), beta.data() + rs.rank()));
  }
  for (const Eigen::VectorXi& beta : sub.roots) {
    bool decomposable = false;
    for (const Eigen::VectorXi& gamma : sub.roots) {
      Eigen::VectorXi diff = beta - gamma;
      if (diff.minCoeff() < 0 || diff.sum() == 0) continue;
      std::vector<int> dv(diff.data(), diff.data() + rs.rank());
      if (member_set.count(dv)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) sub.simple_system.push_back(beta);
  }
  sub.type_decomposition = identify(rs, sub.simple_system);
  Eigen::MatrixXi mat(static_cast<int>(sub.simple_system.size()), rs.rank());
  for (int i = 0; i < static_cast<int>(sub.simple_system.size()); ++i) {
    mat.row(i) = sub.simple_system[i].transpose();
  }
  const int indep =
      sub.simple_system.empty() ? 0 : integer_matrix_rank(mat);
  sub.corank = rs.rank() - indep;
  return sub;
}

}  // namespace satake
