// Copyright 2026 The parabraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "parabraid/commands.hpp"

#include "parabraid/braid_tl.hpp"
#include "parabraid/constants.hpp"
#include "parabraid/entanglement.hpp"
#include "parabraid/linalg.hpp"
#include "parabraid/parafermion.hpp"
#include "parabraid/parity.hpp"
#include "parabraid/topo_basis.hpp"
#include "parabraid/yang_baxter.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

namespace parabraid {

namespace {

constexpr double kNegativeControlFloor = 1e-3;
constexpr double kFaithfulLeakage = 1e-10;
constexpr double kJonesMatchTol = 1e-10;
constexpr double kYbeCheckTol = 1e-10;
constexpr int kRandomSamples = 100;
constexpr int kSectorSamples = 20;

std::string version_string() {
  std::ostringstream v;
  v << "parabraid 1.0.0; Eigen " << EIGEN_WORLD_VERSION << "." << EIGEN_MAJOR_VERSION << "."
    << EIGEN_MINOR_VERSION;
  return v.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json matrix_json(const ComplexMatrix& m, bool exact) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (exact) {
        row.push_back(exact_string(m(r, c)));
      } else {
        row.push_back(Json::array({json_number(m(r, c).real()), json_number(m(r, c).imag())}));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Collapses an identity suite into a single verify-report line.
void add_group(VerifyReport& report, const std::string& name, const AlgebraReport& group,
               double tol) {
  const double residual = group.max_residual();
  const bool ok = residual < tol;
  report.checks.push_back({name, residual, tol, ok, Check::Mode::below});
  report.overall_pass = report.overall_pass && ok;
  for (const auto& n : group.notes) report.notes.push_back(name + ": " + n);
}

void add_check(VerifyReport& report, const std::string& name, double residual, double tol,
               Check::Mode mode = Check::Mode::below) {
  const bool ok = mode == Check::Mode::below ? residual < tol : residual > tol;
  report.checks.push_back({name, residual, tol, ok, mode});
  report.overall_pass = report.overall_pass && ok;
}

// Uniform theta in [0, pi); lazily resamples around the pi/2 pole where the
// additivity law is singular.
class ThetaSampler {
 public:
  explicit ThetaSampler(std::uint64_t seed) : rng_(seed), dist_(0.0, std::numbers::pi) {}
  double operator()() { return dist_(rng_); }
  YbeTriple constrained() {
    for (;;) {
      const double t1 = (*this)();
      const double t3 = (*this)();
      try {
        return constrained_triple(t1, t3);
      } catch (const DegenerateConstraint&) {
      }
    }
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> dist_;
};

Json extremum_json(const Extremum& e) {
  Json j;
  j["kind"] = e.kind == Extremum::Kind::maximum ? "maximum" : "minimum";
  j["theta"] = json_number(e.theta);
  j["value"] = json_number(e.value);
  j["grid_theta"] = json_number(e.grid_theta);
  j["plateau"] = e.plateau;
  if (e.plateau) {
    j["plateau_interval"] = Json::array({json_number(e.plateau_lo), json_number(e.plateau_hi)});
  }
  return j;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

Json json_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::strtod(format_number(value).c_str(), nullptr);
}

std::string exact_string(std::complex<double> z) {
  constexpr double tol = 1e-12;
  const double r = std::abs(z);
  if (r < tol) return "0";
  static const std::array<std::pair<double, const char*>, 9> magnitudes{{
      {1.0, "1"},
      {2.0, "2"},
      {1.0 / 3.0, "1/3"},
      {2.0 / 3.0, "2/3"},
      {std::numbers::sqrt2, "sqrt2"},
      {std::numbers::sqrt3, "sqrt3"},
      {1.0 / std::numbers::sqrt3, "1/sqrt3"},
      {2.0 / std::numbers::sqrt3, "2/sqrt3"},
      {std::numbers::sqrt2 / std::numbers::sqrt3, "sqrt2/sqrt3"},
  }};
  static const std::array<const char*, 12> phases{
      "1", "e^(i*pi/6)", "-w^2", "i", "w", "e^(5i*pi/6)",
      "-1", "e^(-5i*pi/6)", "w^2", "-i", "-w", "e^(-i*pi/6)"};
  for (const auto& [mag, mag_text] : magnitudes) {
    if (std::abs(r - mag) > tol) continue;
    for (int k = 0; k < 12; ++k) {
      const std::complex<double> candidate = std::polar(mag, k * std::numbers::pi / 6.0);
      if (std::abs(z - candidate) > tol) continue;
      const std::string phase = phases[static_cast<std::size_t>(k)];
      const std::string m = mag_text;
      if (m == "1") return phase;
      if (phase == "1") return m;
      if (phase == "-1") return "-" + m;
      return phase + "*" + m;
    }
  }
  std::string text = format_number(z.real());
  if (z.imag() != 0.0) {
    text += (z.imag() < 0 ? "-" : "+") + format_number(std::abs(z.imag())) + "i";
  }
  return text;
}

Json VerifyReport::to_json(bool include_timestamp) const {
  Json j;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json row;
    row["name"] = c.name;
    row["residual"] = json_number(c.residual);
    row["tolerance"] = json_number(c.tolerance);
    row["mode"] = c.mode == Check::Mode::below ? "below" : "above";
    row["pass"] = c.pass;
    list.push_back(std::move(row));
  }
  j["checks"] = std::move(list);
  j["notes"] = notes;
  j["overall_pass"] = overall_pass;
  Json meta;
  meta["seed"] = seed;
  meta["tolerance"] = json_number(tolerance);
  meta["versions"] = versions;
  if (include_timestamp) meta["timestamp"] = timestamp;
  j["metadata"] = std::move(meta);
  return j;
}

VerifyReport cmd_verify(double tolerance, std::uint64_t seed) {
  VerifyReport report;
  report.seed = seed;
  report.tolerance = tolerance;
  report.versions = version_string();
  report.timestamp = utc_timestamp();
  ThetaSampler sample(seed);

  // Parafermion algebra.
  const ParafermionSet pf2 = build_parafermions(2);
  for (int n : {2, 3}) {
    const ParafermionSet set = build_parafermions(n);
    add_group(report, "parafermion algebra N=" + std::to_string(n),
              verify_parafermion_algebra(set, tolerance), tolerance);
  }

  // Temperley-Lieb algebra, both families.
  const TLFamily nearest = nearest_family(pf2);
  const TLFamily localized = localized_family(4);
  add_group(report, "T-L algebra nearest N=2", verify_tl_algebra(nearest, tolerance), tolerance);
  add_group(report, "T-L algebra localized nsites=4", verify_tl_algebra(localized, tolerance),
            tolerance);

  // Braid relations.
  std::vector<ComplexMatrix> b;
  for (const auto& t : nearest.elements) b.push_back(braid_from_tl(t));
  std::vector<ComplexMatrix> bl;
  for (const auto& t : localized.elements) bl.push_back(braid_from_tl(t));
  add_check(report, "braid relation B1 B2", braid_relation_residual(b[0], b[1]), tolerance);
  add_check(report, "braid relation B2 B3", braid_relation_residual(b[1], b[2]), tolerance);
  add_check(report, "braid relation B'1 B'2 (nsites=4)", braid_relation_residual(bl[0], bl[1]),
            tolerance);
  add_check(report, "braid relation B'2 B'3 (nsites=4)", braid_relation_residual(bl[1], bl[2]),
            tolerance);
  for (std::size_t k = 0; k < b.size(); ++k) {
    add_check(report, "unitarity B" + std::to_string(k + 1), unitarity_residual(b[k]), tolerance);
  }
  {
    ComplexMatrix site = ComplexMatrix::Zero(3, 3);
    site.diagonal() << std::conj(kPhasePi3<>), kPhasePi3<>, std::conj(kPhasePi3<>);
    std::ostringstream note;
    note << "B3 (no literal reference): equals I (x) diag(e^{-i pi/3}, e^{i pi/3}, e^{-i pi/3}) "
         << "to " << frobenius_distance(b[2], kron(identity(3), site));
    report.notes.push_back(note.str());
  }

  // Literal braid matrices.
  add_check(report, "B12 literal match", frobenius_distance(b[0], literal_b12()), tolerance);
  add_check(report, "B23 literal match", frobenius_distance(b[1], literal_b23()), tolerance);

  // R(theta) unitarity sample.
  double unitarity = 0.0;
  for (int k = 0; k < kRandomSamples; ++k) {
    const double theta = sample();
    unitarity = std::max(unitarity, unitarity_residual(r_matrix(b[0], theta)));
    unitarity = std::max(unitarity, unitarity_residual(r_matrix(b[1], theta)));
  }
  add_check(report, "R(theta) unitarity, 100 random theta", unitarity, tolerance);

  // Yang-Baxter equation.
  double ybe = 0.0;
  double ybe_sector = 0.0;
  for (int k = 0; k < kRandomSamples; ++k) {
    const YbeTriple t = sample.constrained();
    ybe = std::max(ybe, ybe_residual(b[0], b[1], t));
    const ComplexMatrix lhs =
        reduced_a12(t.theta1) * reduced_a23(t.theta2) * reduced_a12(t.theta3);
    const ComplexMatrix rhs =
        reduced_a23(t.theta3) * reduced_a12(t.theta2) * reduced_a23(t.theta1);
    ybe_sector = std::max(ybe_sector, frobenius_distance(lhs, rhs));
  }
  add_check(report, "YBE, 100 constrained random triples", ybe, tolerance);
  add_check(report, "YBE negative control (0.3, 0.3, 0.7)",
            ybe_residual(b[0], b[1], {0.3, 0.3, 0.7}), kNegativeControlFloor, Check::Mode::above);
  add_check(report, "R(pi/3) = B",
            std::max(frobenius_distance(r_matrix(b[0], std::numbers::pi / 3), b[0]),
                     frobenius_distance(r_matrix(b[1], std::numbers::pi / 3), b[1])),
            tolerance);
  add_check(report, "R(0) = I", frobenius_distance(r_matrix(b[1], 0.0), identity(9)), tolerance);

  // Parity sectors.
  const ComplexMatrix parity = parity_operator();
  double comm = 0.0;
  double leakage = 0.0;
  double block_match = 0.0;
  for (int k = 0; k < kSectorSamples; ++k) {
    const double theta = sample();
    const ComplexMatrix r12 = r_matrix(b[0], theta);
    const ComplexMatrix r23 = r_matrix(b[1], theta);
    comm = std::max({comm, commutator_norm(r12, parity), commutator_norm(r23, parity)});
    const SectorDecomposition s12 = sector_blocks(r12);
    const SectorDecomposition s23 = sector_blocks(r23);
    leakage = std::max({leakage, s12.leakage, s23.leakage});
    block_match = std::max({block_match,
                            frobenius_distance(s12.block(Parity::omega2), reduced_a12(theta)),
                            frobenius_distance(s23.block(Parity::omega2), reduced_a23(theta))});
  }
  add_check(report, "[R12, P], [R23, P]", comm, tolerance);
  add_check(report, "sector leakage under U", leakage, tolerance);
  add_check(report, "w^2 blocks match A12, A23", block_match, tolerance);
  add_check(report, "sector YBE, 100 constrained random triples", ybe_sector, tolerance);

  // T' constructions.
  const ComplexMatrix stencil = tl_stencil();
  const ComplexMatrix para = tl_localized_parafermionic(pf2, 1);
  const ComplexMatrix ketbra = tl_ketbra(1, 2);
  add_check(report, "T' stencil vs parafermionic", frobenius_distance(stencil, para), tolerance);
  add_check(report, "T' stencil vs ket-bra", frobenius_distance(stencil, ketbra), tolerance);
  add_check(report, "T' parafermionic vs ket-bra", frobenius_distance(para, ketbra), tolerance);
  add_check(report, "T'1 ket-bra vs localized (nsites=4)",
            frobenius_distance(tl_ketbra(1), tl_localized(4, 1)), tolerance);

  // Topological basis and Jones reduction.
  const TopologicalBasis basis = build_topological_basis();
  add_check(report, "topological basis Gram - I", frobenius_distance(basis.gram(), identity(2)),
            tolerance);
  for (int i = 1; i <= 3; ++i) {
    const ComplexMatrix t = tl_ketbra(i);
    const Projection pt = project_operator(t, basis);
    const Projection pb = project_operator(braid_from_tl(t), basis);
    const std::string idx = std::to_string(i);
    add_check(report, "Jones T'" + idx + " projection",
              std::max(frobenius_distance(pt.matrix, jones_reference(i, JonesKind::tl)),
                       pt.leakage),
              tolerance);
    add_check(report, "Jones B'" + idx + " projection",
              std::max(frobenius_distance(pb.matrix, jones_reference(i, JonesKind::braid)),
                       pb.leakage),
              tolerance);
  }
  report.notes.push_back(
      "pair-state site order: first ket slot on the first listed site (gamma_41: slot 1 on site 4)");
  return report;
}

CommandResult cmd_scan(double min, double max, int steps, const std::string& out_path,
                       bool base3_column) {
  CommandResult result;
  std::vector<ThetaSample> samples;
  try {
    samples = sweep_theta(min, max, steps);
  } catch (const std::invalid_argument& e) {
    return {kExitUsageError, "", e.what()};
  }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    return {kExitUsageError, "", "scan: cannot open '" + out_path + "' for writing"};
  }
  const double ln3 = std::log(3.0);
  out << (base3_column ? "theta,l1_norm,entropy,entropy_base3\n" : "theta,l1_norm,entropy\n");
  for (const auto& s : samples) {
    out << format_number(s.theta) << ',' << format_number(s.l1) << ','
        << format_number(s.entropy);
    if (base3_column) out << ',' << format_number(s.entropy / ln3);
    out << '\n';
  }
  out.close();
  if (!out) {
    return {kExitUsageError, "", "scan: write to '" + out_path + "' failed"};
  }

  Json summary;
  summary["out"] = out_path;
  summary["samples"] = samples.size();
  if (samples.size() >= 3) {
    const ExtremaReport ex = find_extrema(samples, 1e-10);
    Json l1 = Json::array();
    for (const auto& e : ex.l1) l1.push_back(extremum_json(e));
    Json ent = Json::array();
    for (const auto& e : ex.entropy) ent.push_back(extremum_json(e));
    summary["extrema"] = {{"l1_norm", l1}, {"entropy", ent}};
    Json gmax;
    if (const Extremum* e = ex.global_maximum(Curve::l1)) gmax["l1_norm"] = extremum_json(*e);
    if (const Extremum* e = ex.global_maximum(Curve::entropy)) gmax["entropy"] = extremum_json(*e);
    summary["global_maximum"] = gmax.is_null() ? Json::object() : gmax;
    summary["max_location_gap"] = json_number(ex.max_gap);
  }
  result.output = summary.dump(2);
  return result;
}

CommandResult cmd_ybe_check(double theta1, double theta3) {
  double theta2 = 0.0;
  try {
    theta2 = theta2_of(theta1, theta3);
  } catch (const DegenerateConstraint& e) {
    return {kExitUsageError, "", e.what()};
  }
  const YbeTriple t{theta1, theta2, theta3};
  const ComplexMatrix b1 = braid_from_tl(tl_localized(3, 1));
  const ComplexMatrix b2 = braid_from_tl(tl_localized(3, 2));
  const double full = ybe_residual(b1, b2, t);
  const double sector =
      frobenius_distance(reduced_a12(t.theta1) * reduced_a23(t.theta2) * reduced_a12(t.theta3),
                         reduced_a23(t.theta3) * reduced_a12(t.theta2) * reduced_a23(t.theta1));
  const bool ok = full < kYbeCheckTol && sector < kYbeCheckTol;

  Json j;
  j["theta1"] = json_number(theta1);
  j["theta3"] = json_number(theta3);
  j["theta2"] = json_number(theta2);
  j["branch"] = "principal";
  j["residual_full"] = json_number(full);
  j["residual_sector"] = json_number(sector);
  j["tolerance"] = json_number(kYbeCheckTol);
  j["pass"] = ok;
  return {ok ? kExitPass : kExitVerificationFailure, j.dump(2), ""};
}

CommandResult cmd_sectors(const std::string& op, double theta, bool exact) {
  const ParafermionSet pf2 = build_parafermions(2);
  ComplexMatrix m;
  if (op == "R12") {
    m = r_matrix(braid_from_tl(tl_nearest(pf2, 1)), theta);
  } else if (op == "R23") {
    m = r_matrix(braid_from_tl(tl_nearest(pf2, 2)), theta);
  } else if (op == "B12") {
    m = braid_from_tl(tl_nearest(pf2, 1));
  } else if (op == "B23") {
    m = braid_from_tl(tl_nearest(pf2, 2));
  } else if (op == "T") {
    m = tl_stencil();
  } else {
    return {kExitUsageError, "", "sectors: unknown operator '" + op + "' (R12|R23|B12|B23|T)"};
  }
  SectorDecomposition dec;
  try {
    dec = sector_blocks(m);
  } catch (const NotParityCommuting& e) {
    return {kExitVerificationFailure, "", e.what()};
  }
  Json j;
  j["operator"] = op;
  j["theta"] = json_number(theta);
  j["leakage"] = json_number(dec.leakage);
  Json blocks;
  for (const auto& sector : parity_sectors()) {
    Json entry;
    Json labels = Json::array();
    for (const auto& [a, c] : sector.basis) labels.push_back(std::to_string(a) + std::to_string(c));
    entry["basis"] = labels;
    entry["matrix"] = matrix_json(dec.block(sector.parity), exact);
    blocks[parity_name(sector.parity)] = entry;
  }
  j["blocks"] = blocks;
  return {kExitPass, j.dump(2), ""};
}

CommandResult cmd_jones(bool exact) {
  const TopologicalBasis basis = build_topological_basis();
  Json results = Json::array();
  bool all_ok = true;
  for (JonesKind kind : {JonesKind::tl, JonesKind::braid}) {
    for (int i = 1; i <= 3; ++i) {
      const ComplexMatrix t = tl_ketbra(i);
      const ComplexMatrix op = kind == JonesKind::tl ? t : braid_from_tl(t);
      const Projection p = project_operator(op, basis);
      const ComplexMatrix ref = jones_reference(i, kind);
      const double dist = frobenius_distance(p.matrix, ref);
      const bool faithful = p.leakage < kFaithfulLeakage;
      const bool ok = faithful && dist < kJonesMatchTol;
      all_ok = all_ok && ok;

      Json r;
      r["operator"] = (kind == JonesKind::tl ? "T'" : "B'") + std::to_string(i);
      r["projected_matrix"] = faithful ? matrix_json(p.matrix, exact) : Json(nullptr);
      r["reference_matrix"] = matrix_json(ref, exact);
      r["frobenius_distance"] = json_number(dist);
      r["leakage"] = json_number(p.leakage);
      r["pass"] = ok;
      if (!faithful) r["status"] = "FAILURE: span of {e1, e2} is not invariant";
      results.push_back(std::move(r));
    }
  }
  Json j;
  j["results"] = results;
  j["pass"] = all_ok;
  return {all_ok ? kExitPass : kExitVerificationFailure, j.dump(2), ""};
}

CommandResult cmd_state(double theta) {
  const StateVector psi = psi_theta(theta);
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < psi.dim(); ++k) {
    Json a;
    a["basis"] = StateVector::label_of(static_cast<std::size_t>(k), 2);
    a["re"] = json_number(psi.amplitudes()(k).real());
    a["im"] = json_number(psi.amplitudes()(k).imag());
    amps.push_back(std::move(a));
  }
  const double entropy = von_neumann_entropy(partial_trace(psi, 1));
  Json j;
  j["theta"] = json_number(theta);
  j["amplitudes"] = amps;
  j["l1_norm"] = json_number(l1_norm(psi));
  j["entropy"] = json_number(entropy);
  j["entropy_base3"] = json_number(entropy / std::log(3.0));
  return {kExitPass, j.dump(2), ""};
}

}  // namespace parabraid
