#include "weyl/curvature/yamabe.hpp"

#include <cmath>
#include <string>

#include "weyl/curvature/curvature.hpp"
#include "weyl/curvature/functionals.hpp"
#include "weyl/errors.hpp"

namespace weyl::curvature {

namespace {

constexpr double kFloor = 1e-6;

// Discretised functional: f = sum_k c_k phi_k, with the quadratic parts
// assembled once and the quartic part evaluated from nodal basis values.
class Problem {
 public:
  Problem(const CatalogMetric& metric, int resolution) {
    for (const auto& chart : metric.charts) {
      if (!chart.embedding) throw std::invalid_argument("chart " + chart.name + " has no embedding");
      for (const auto& node : chart_nodes(chart, resolution)) add_node(chart, node);
    }
  }

  std::size_t size() const { return k_; }

  double value(const Eigen::VectorXd& c, double* d_out = nullptr) const {
    Eigen::VectorXd f = phi_ * c;
    double q = weights_.dot(f.array().pow(4).matrix());
    double d = std::sqrt(q);
    if (d_out) *d_out = d;
    return c.dot(m_ * c) / d;
  }

  Eigen::VectorXd gradient(const Eigen::VectorXd& c) const {
    Eigen::VectorXd f = phi_ * c;
    Eigen::VectorXd wf3 = (weights_.array() * f.array().cube()).matrix();
    double d = std::sqrt(weights_.dot(f.array().pow(4).matrix()));
    double n = c.dot(m_ * c);
    return 2.0 * (m_ * c) / d - (2.0 * n / (d * d * d)) * (phi_.transpose() * wf3);
  }

  double min_nodal(const Eigen::VectorXd& c) const { return (phi_ * c).minCoeff(); }

  Eigen::VectorXd constant() const {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k_));
    c(0) = 1.0;
    return c;
  }

  Eigen::VectorXd linear(int index, double amplitude) const {
    if (index < 0 || static_cast<std::size_t>(index) >= dim_) {
      throw std::invalid_argument("perturbation index outside the embedding dimension " + std::to_string(dim_));
    }
    Eigen::VectorXd c = constant();
    c(1 + index) = amplitude;
    return c;
  }

  void finish() {
    const auto p = static_cast<Eigen::Index>(rows_.size());
    const auto k = static_cast<Eigen::Index>(k_);
    phi_.resize(p, k);
    weights_.resize(p);
    for (Eigen::Index i = 0; i < p; ++i) {
      weights_(i) = w_[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < k; ++j) phi_(i, j) = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    rows_.clear();
    w_.clear();
    m_ = 6.0 * a_ + b_;
  }

 private:
  void add_node(const MetricChart& chart, const QuadratureNode& node) {
    PointCurvature pc = riemann_at(chart, node.x);
    CurvatureDecomposition dec = decompose(pc.riemann, pc.g, chart.orientation);
    const double w = node.weight * std::sqrt(pc.g.determinant());
    const Mat4 ginv = pc.g.inverse();
    EmbeddingValue e = chart.embedding(node.x);
    if (k_ == 0) {
      dim_ = e.y.size();
      k_ = 1 + dim_ + dim_ * (dim_ + 1) / 2;
      a_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k_), static_cast<Eigen::Index>(k_));
      b_ = a_;
    } else if (e.y.size() != dim_) {
      throw std::invalid_argument("charts disagree on the embedding dimension");
    }
    std::vector<double> val(k_);
    std::vector<Vec4> grad(k_, Vec4{});
    val[0] = 1.0;
    std::size_t k = 1;
    for (std::size_t a = 0; a < dim_; ++a, ++k) {
      val[k] = e.y[a];
      grad[k] = e.dy[a];
    }
    for (std::size_t a = 0; a < dim_; ++a) {
      for (std::size_t b = a; b < dim_; ++b, ++k) {
        val[k] = e.y[a] * e.y[b];
        for (int i = 0; i < 4; ++i) grad[k][i] = e.dy[a][i] * e.y[b] + e.y[a] * e.dy[b][i];
      }
    }
    for (std::size_t p = 0; p < k_; ++p) {
      Eigen::Vector4d gp(grad[p][0], grad[p][1], grad[p][2], grad[p][3]);
      Eigen::Vector4d raised = ginv * gp;
      for (std::size_t q = p; q < k_; ++q) {
        Eigen::Vector4d gq(grad[q][0], grad[q][1], grad[q][2], grad[q][3]);
        double av = w * raised.dot(gq);
        double bv = w * dec.s * val[p] * val[q];
        const auto ip = static_cast<Eigen::Index>(p), iq = static_cast<Eigen::Index>(q);
        a_(ip, iq) += av;
        b_(ip, iq) += bv;
        if (q != p) {
          a_(iq, ip) += av;
          b_(iq, ip) += bv;
        }
      }
    }
    rows_.push_back(std::move(val));
    w_.push_back(w);
  }

  std::size_t dim_ = 0, k_ = 0;
  Eigen::MatrixXd a_, b_, m_;
  Eigen::MatrixXd phi_;
  Eigen::VectorXd weights_;
  std::vector<std::vector<double>> rows_;
  std::vector<double> w_;
};

Problem build(const CatalogMetric& metric, int resolution) {
  if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
  Problem p(metric, resolution);
  p.finish();
  return p;
}

}  // namespace

double yamabe_of_constant(const CatalogMetric& metric, int resolution) {
  Problem p = build(metric, resolution);
  return p.value(p.constant());
}

YamabeResult yamabe_descent(const CatalogMetric& metric, const YamabeOptions& options) {
  if (options.step_count < 0) throw std::invalid_argument("step count must be nonnegative");
  if (!(options.learning_rate > 0.0)) throw std::invalid_argument("learning rate must be positive");
  Problem p = build(metric, options.resolution);
  Eigen::VectorXd c = options.start ? p.linear(options.start->index, options.start->amplitude) : p.constant();
  if (p.min_nodal(c) < kFloor) throw std::invalid_argument("initial function is not positive");

  YamabeResult out;
  double d = 0.0;
  double y = p.value(c, &d);
  c /= std::sqrt(d);
  out.initial_value = y;
  out.history.push_back(y);
  double eta = options.learning_rate;
  double last_decrease = 0.0;
  bool converged = false;
  for (int step = 0; step < options.step_count; ++step) {
    Eigen::VectorXd g = p.gradient(c);
    double gn = g.norm();
    if (!(gn > 0.0)) {
      out.stationary = converged = true;
      break;
    }
    Eigen::VectorXd dir = -g / gn * c.norm();
    bool accepted = false;
    double y_new = y;
    Eigen::VectorXd c_new;
    for (int tries = 0; tries < 50 && !accepted; ++tries, eta *= 0.5) {
      c_new = c + eta * dir;
      if (p.min_nodal(c_new) < kFloor) continue;
      y_new = p.value(c_new, &d);
      accepted = y_new < y;
    }
    if (!accepted) {
      out.stationary = converged = true;
      break;
    }
    eta = std::min(options.learning_rate, 4.0 * eta);
    c = c_new / std::sqrt(d);
    last_decrease = (y - y_new) / std::abs(y);
    y = y_new;
    out.history.push_back(y);
    ++out.steps;
    if (last_decrease < options.tolerance) {
      converged = true;
      break;
    }
  }
  out.estimate = y;
  if (!converged && options.step_count > 0) {
    throw DomainError(ErrorCode::NonConvergence, "relative decrease " + std::to_string(last_decrease) +
                                                     " still above tolerance after " +
                                                     std::to_string(options.step_count) + " steps");
  }
  return out;
}

}  // namespace weyl::curvature
