#include "gkm/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "gkm/error.hpp"
#include "json.hpp"

namespace gkm {

using nlohmann::json;
using nlohmann::ordered_json;

std::vector<WeightVector> xi_candidates(std::size_t rank) {
  std::vector<WeightVector> out;
  if (rank == 2) {
    out = {WeightVector{Rational(1), Rational(2)}, WeightVector{Rational(1), Rational(3)},
           WeightVector{Rational(2), Rational(1)}};
    for (long m = 1; m <= 24; ++m) {
      for (long a = -m; a <= m; ++a) {
        for (long b = -m; b <= m; ++b) {
          if (std::max(std::labs(a), std::labs(b)) != m || std::gcd(a, b) != 1) continue;
          WeightVector w{Rational(a), Rational(b)};
          if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
        }
      }
    }
    return out;
  }
  for (long t = 2; t <= 64; ++t) {
    WeightVector w(rank);
    Rational power(1);
    for (std::size_t i = 0; i < rank; ++i) {
      w[i] = power;
      power *= Rational(t);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<WeightVector> default_xi(const std::shared_ptr<const GkmGraph>& g) {
  for (const auto& xi : xi_candidates(g->rank())) {
    try {
      if (is_index_increasing(orient(g, xi))) return xi;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotGeneric) throw;
    }
  }
  return std::nullopt;
}

namespace {

ordered_json vec(const WeightVector& w) {
  ordered_json out = ordered_json::array();
  for (const auto& c : w.components()) out.push_back(c.to_string());
  return out;
}

ordered_json matrix(const RationalMatrix& m) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json ids(const GkmGraph& g, const std::vector<std::size_t>& vs) {
  ordered_json out = ordered_json::array();
  for (std::size_t v : vs) out.push_back(g.id(v));
  return out;
}

std::string shape_name(const CycleShape& s) {
  return s.triangular ? "triangular" : "tetragonal " + std::string(to_string(s.tetragon));
}

std::string matrix_text(const RationalMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      cells.push_back(m(i, j).to_string());
      width = std::max(width, cells.back().size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace

std::string report_json(const OrientedGkmGraph& og, const LefschetzReport& r) {
  const auto& g = og.graph();
  ordered_json root;
  root["xi"] = vec(og.xi());
  root["vertices"] = g.vertex_count();
  root["edges"] = g.edge_count();
  root["index_increasing"] = r.index_increasing;
  ordered_json morse = ordered_json::object();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) morse[g.id(v)] = r.down_degree[v];
  root["down_degree"] = std::move(morse);
  root["betti"] = r.betti;
  root["volume"] = r.volume.to_string();

  ordered_json hr = ordered_json::array();
  for (const auto& m : r.hr) {
    hr.push_back({{"k", m.k},
                  {"rows", ids(g, m.rows)},
                  {"columns", ids(g, m.columns)},
                  {"omega_power", m.omega_power},
                  {"matrix", matrix(m.entries)},
                  {"determinant", r.hr_determinant.at(m.k).to_string()},
                  {"nonsingular", r.verdict.at(m.k)}});
  }
  root["hodge_riemann"] = std::move(hr);
  root["hard_lefschetz"] = r.hard_lefschetz;

  if (r.six_dimensional) {
    const auto& t = *r.table;
    root["table_type"] = {{"label", std::string(1, t.label)},
                          {"hull_vertices", t.hull_vertices},
                          {"vertex_count", t.vertex_count},
                          {"o_adjacent_r", t.o_adjacent_r},
                          {"tetragonal_cycles", t.tetragonal_cycles}};
    ordered_json cycles = ordered_json::array();
    for (const auto& c : r.cycles) {
      cycles.push_back({{"p", g.id(c.start)}, {"vertices", ids(g, c.vertices)}, {"shape", shape_name(c)}});
    }
    root["cycles"] = std::move(cycles);
    ordered_json pairs = ordered_json::array();
    for (const auto& p : r.pairs) {
      pairs.push_back({{"p", g.id(p.p)},
                       {"q", g.id(p.q)},
                       {"adjacent", p.adjacent},
                       {"l", p.l.to_string()},
                       {"c", p.c.to_string()}});
    }
    root["coefficients"] = std::move(pairs);
    root["a_matrix"] = {{"rows", ids(g, r.a->q)}, {"columns", ids(g, r.a->p)}, {"matrix", matrix(r.a->entries)}};
    root["a_determinant"] = r.a_determinant->to_string();
    root["sign_checks"] = r.sign_witnesses.size();
    if (r.column_witness) {
      root["column_independence"] = {{"t0", r.column_witness->t0.to_string()},
                                     {"second", r.column_witness->second.to_string()},
                                     {"noncollinear", r.column_witness->noncollinear}};
    }
    if (r.cyclic_witness) {
      root["cyclic_sign_pattern"] = {{"row_order", ids(g, [&] {
                                        std::vector<std::size_t> rows;
                                        for (std::size_t i : r.cyclic_witness->row_order) rows.push_back(r.a->q[i]);
                                        return rows;
                                      }())},
                                     {"determinant", r.cyclic_witness->determinant.to_string()},
                                     {"all_convex", r.cyclic_witness->all_convex}};
    }
  }
  return root.dump(2) + "\n";
}

std::string report_text(const OrientedGkmGraph& og, const LefschetzReport& r) {
  const auto& g = og.graph();
  std::ostringstream out;
  out << "xi = " << og.xi().to_string() << "\n";
  out << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", valence " << g.valence() << "\n";
  out << "index-increasing: " << (r.index_increasing ? "yes" : "no") << "\n";
  out << "down degrees:";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << " " << g.id(v) << "=" << r.down_degree[v];
  out << "\nbetti:";
  for (std::size_t b : r.betti) out << " " << b;
  out << "\nvolume: " << r.volume.to_string() << "\n";
  if (r.six_dimensional) {
    const auto& t = *r.table;
    out << "type (" << t.label << "): hull " << t.hull_vertices << ", |V| " << t.vertex_count << ", o~r "
        << (t.o_adjacent_r ? "yes" : "no") << ", tetragonal cycles " << t.tetragonal_cycles << "\n";
    for (const auto& c : r.cycles) {
      out << "  cycle of " << g.id(c.start) << ":";
      for (std::size_t v : c.vertices) out << " " << g.id(v);
      out << " (" << shape_name(c) << ")\n";
    }
    out << "coefficients (p, q, l, c):\n";
    for (const auto& p : r.pairs) {
      out << "  " << g.id(p.p) << " " << g.id(p.q) << "  l=" << p.l.to_string() << "  c=" << p.c.to_string() << "\n";
    }
    out << "a-matrix (rows";
    for (std::size_t q : r.a->q) out << " " << g.id(q);
    out << "; columns";
    for (std::size_t p : r.a->p) out << " " << g.id(p);
    out << "), det " << r.a_determinant->to_string() << "\n" << matrix_text(r.a->entries);
    if (r.column_witness) {
      out << "column independence: t0 = " << r.column_witness->t0.to_string()
          << ", a22 + t0 a21 = " << r.column_witness->second.to_string() << "\n";
    }
    if (r.cyclic_witness) out << "cyclic sign pattern: det " << r.cyclic_witness->determinant.to_string() << "\n";
    out << "sign checks passed: " << r.sign_witnesses.size() << "\n";
  }
  for (const auto& m : r.hr) {
    out << "HR_" << m.k << " (" << m.rows.size() << "x" << m.columns.size() << "), det "
        << r.hr_determinant.at(m.k).to_string() << (r.verdict.at(m.k) ? "" : "  SINGULAR") << "\n"
        << matrix_text(m.entries);
  }
  out << "hard Lefschetz: " << (r.hard_lefschetz ? "holds" : "fails") << "\n";
  return out.str();
}

}  // namespace gkm
