#include "wanopt/model.hpp"

#include <json.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace wanopt {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

MatrixXcd zero_block(int n) { return MatrixXcd::Zero(n, n); }

void add_term(std::vector<HoppingTerm>& terms, int m1, int m2,
              const MatrixXcd& t) {
  for (HoppingTerm& term : terms) {
    if (term.m1 == m1 && term.m2 == m2) {
      term.t += t;
      return;
    }
  }
  terms.push_back({m1, m2, t});
}

TightBindingModel square3_model() {
  const double t_dd = 0.1, t_pd = 2.0, t_pp = -0.25;
  const double eps_d = 1.0, eps_p = -2.0;
  const double s = 1.0 / std::sqrt(2.0);

  TightBindingModel m;
  m.name = "square3";
  m.lat = make_lattice({s, -s}, {s, s});
  m.dim = 3;
  m.band = 2;  // top of three

  // The published closed forms are rewritten as hopping sums through
  // exp(i t) 2i sin(t) = exp(2it) - 1 and product-to-sum identities,
  // using k.a1 = (kx - ky)/sqrt(2), k.a2 = (kx + ky)/sqrt(2).
  MatrixXcd t0 = zero_block(3);
  t0(0, 0) = eps_p;
  t0(1, 1) = eps_p;
  t0(2, 2) = eps_d;
  t0(0, 2) = t_pd;
  t0(2, 0) = t_pd;
  add_term(m.terms, 0, 0, t0);

  MatrixXcd t10 = zero_block(3);
  t10(0, 0) = t_pp;
  t10(1, 1) = t_pp;
  t10(2, 2) = t_dd;
  t10(1, 2) = -t_pd;
  add_term(m.terms, 1, 0, t10);
  add_term(m.terms, -1, 0, t10.adjoint());

  MatrixXcd t01 = zero_block(3);
  t01(0, 0) = t_pp;
  t01(1, 1) = t_pp;
  t01(2, 2) = t_dd;
  t01(1, 2) = t_pd;
  add_term(m.terms, 0, 1, t01);
  add_term(m.terms, 0, -1, t01.adjoint());

  MatrixXcd t11 = zero_block(3);
  t11(0, 2) = -t_pd;
  add_term(m.terms, 1, 1, t11);
  add_term(m.terms, -1, -1, t11.adjoint());
  return m;
}

TightBindingModel haldane_model(bool chern) {
  const double t1 = 1.0, v0 = 0.5, t2 = -0.45;
  const double rt3 = std::sqrt(3.0);

  TightBindingModel m;
  m.name = chern ? "haldane-chern" : "haldane-trivial";
  m.lat = make_lattice({rt3 / 2.0, 0.5}, {rt3 / 2.0, -0.5});
  m.dim = 2;
  m.band = 1;  // top of two

  MatrixXcd t0 = zero_block(2);
  t0(0, 0) = v0;
  t0(1, 1) = -v0;
  t0(0, 1) = t1;
  t0(1, 0) = t1;
  add_term(m.terms, 0, 0, t0);

  MatrixXcd hop = zero_block(2);
  hop(0, 1) = t1;  // exp(-i k.a_j) pieces of the off-diagonal element
  add_term(m.terms, -1, 0, hop);
  add_term(m.terms, 0, -1, hop);
  add_term(m.terms, 1, 0, hop.adjoint());
  add_term(m.terms, 0, 1, hop.adjoint());

  if (chern) {
    MatrixXcd sz = zero_block(2);
    sz(0, 0) = 1.0;
    sz(1, 1) = -1.0;
    const std::complex<double> half_it2(0.0, 0.5 * t2);
    // t2 (sin k.a1 - sin k.a2 - sin k.(a1 - a2)) sigma_z
    add_term(m.terms, 1, 0, -half_it2 * sz);
    add_term(m.terms, -1, 0, half_it2 * sz);
    add_term(m.terms, 0, 1, half_it2 * sz);
    add_term(m.terms, 0, -1, -half_it2 * sz);
    add_term(m.terms, 1, -1, half_it2 * sz);
    add_term(m.terms, -1, 1, -half_it2 * sz);
  }
  return m;
}

}  // namespace

MatrixXcd evaluate_h(const TightBindingModel& m, double kappa1,
                     double kappa2) {
  MatrixXcd h = zero_block(m.dim);
  for (const HoppingTerm& term : m.terms) {
    const double phase = two_pi * (term.m1 * kappa1 + term.m2 * kappa2);
    h += term.t * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return h;
}

MatrixXcd evaluate_dh(const TightBindingModel& m, double kappa1, double kappa2,
                      int axis) {
  MatrixXcd dh = zero_block(m.dim);
  for (const HoppingTerm& term : m.terms) {
    const double phase = two_pi * (term.m1 * kappa1 + term.m2 * kappa2);
    const int mm = (axis == 1) ? term.m1 : term.m2;
    const std::complex<double> factor =
        std::complex<double>(0.0, two_pi * mm) *
        std::complex<double>(std::cos(phase), std::sin(phase));
    dh += term.t * factor;
  }
  return dh;
}

TightBindingModel builtin_model(const std::string& name) {
  TightBindingModel m;
  if (name == "square3") {
    m = square3_model();
  } else if (name == "haldane-trivial") {
    m = haldane_model(false);
  } else if (name == "haldane-chern") {
    m = haldane_model(true);
  } else {
    throw UnknownModel("unknown built-in model \"" + name + "\"");
  }
  validate_model(m);
  return m;
}

bool all_terms_real(const TightBindingModel& m) {
  for (const HoppingTerm& term : m.terms)
    if (term.t.imag().cwiseAbs().maxCoeff() > 1e-12) return false;
  return true;
}

bool check_time_reversal(const TightBindingModel& m) {
  std::mt19937 rng(0x5eed);
  std::uniform_real_distribution<double> dist(-0.5, 0.5);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const double k1 = dist(rng), k2 = dist(rng);
    const MatrixXcd h = evaluate_h(m, k1, k2);
    const MatrixXcd h_neg = evaluate_h(m, -k1, -k2);
    worst = std::max(worst, (h.conjugate() - h_neg).norm());
  }
  return worst <= 1e-10;
}

void validate_model(const TightBindingModel& m) {
  if (m.dim < 1) throw ShapeMismatch("model dimension must be positive");
  if (m.band < 0 || m.band >= m.dim)
    throw ShapeMismatch("band index out of range");
  for (const HoppingTerm& term : m.terms) {
    if (term.t.rows() != m.dim || term.t.cols() != m.dim)
      throw ShapeMismatch("hopping block has wrong shape");
    const HoppingTerm* partner = nullptr;
    for (const HoppingTerm& other : m.terms) {
      if (other.m1 == -term.m1 && other.m2 == -term.m2) {
        partner = &other;
        break;
      }
    }
    if (partner == nullptr)
      throw HermiticityViolation("hopping term (" + std::to_string(term.m1) +
                                 "," + std::to_string(term.m2) +
                                 ") has no partner at the opposite lattice "
                                 "vector");
    if ((partner->t - term.t.adjoint()).norm() > 1e-12)
      throw HermiticityViolation(
          "hopping blocks at (" + std::to_string(term.m1) + "," +
          std::to_string(term.m2) + ") violate T(-R) = T(R)^*");
  }
}

TightBindingModel parse_model_file(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid model JSON: ") + e.what());
  }
  TightBindingModel m;
  try {
    const auto a1 = doc.at("a1");
    const auto a2 = doc.at("a2");
    m.lat = make_lattice({a1.at(0).get<double>(), a1.at(1).get<double>()},
                         {a2.at(0).get<double>(), a2.at(1).get<double>()});
    m.dim = doc.at("dim").get<int>();
    m.band = doc.at("band").get<int>();
    m.gap_tol = doc.value("gap_tol", 1e-8);
    m.name = doc.value("name", "custom");
    for (const auto& jt : doc.at("terms")) {
      HoppingTerm term;
      term.m1 = jt.at("m1").get<int>();
      term.m2 = jt.at("m2").get<int>();
      term.t = MatrixXcd::Zero(m.dim, m.dim);
      const auto& re = jt.at("re");
      const auto& im = jt.at("im");
      for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c)
          term.t(r, c) = std::complex<double>(re.at(r).at(c).get<double>(),
                                              im.at(r).at(c).get<double>());
      m.terms.push_back(std::move(term));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed model document: ") + e.what());
  }
  validate_model(m);
  return m;
}

std::string write_model_file(const TightBindingModel& m) {
  nlohmann::json doc;
  doc["name"] = m.name;
  doc["a1"] = {m.lat.a1.x, m.lat.a1.y};
  doc["a2"] = {m.lat.a2.x, m.lat.a2.y};
  doc["dim"] = m.dim;
  doc["band"] = m.band;
  doc["gap_tol"] = m.gap_tol;
  doc["terms"] = nlohmann::json::array();
  for (const HoppingTerm& term : m.terms) {
    nlohmann::json jt;
    jt["m1"] = term.m1;
    jt["m2"] = term.m2;
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (int r = 0; r < m.dim; ++r) {
      nlohmann::json re_row = nlohmann::json::array();
      nlohmann::json im_row = nlohmann::json::array();
      for (int c = 0; c < m.dim; ++c) {
        re_row.push_back(term.t(r, c).real());
        im_row.push_back(term.t(r, c).imag());
      }
      re.push_back(re_row);
      im.push_back(im_row);
    }
    jt["re"] = re;
    jt["im"] = im;
    doc["terms"].push_back(jt);
  }
  return doc.dump(2);
}

}  // namespace wanopt
