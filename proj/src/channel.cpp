#include "zecap/channel.hpp"

#include <cmath>
#include <numbers>

namespace zecap {

namespace {

void check_shapes(const KrausChannel& ch) {
  if (ch.kraus.empty()) {
    throw ParameterError("channel has no Kraus operators");
  }
  for (const Mat& e : ch.kraus) {
    if (e.rows() != ch.dim_out || e.cols() != ch.dim_in) {
      throw DimensionError("Kraus operator shape does not match channel dimensions");
    }
    if (!e.allFinite()) {
      throw ParameterError("Kraus operator has a non-finite entry");
    }
  }
}

}  // namespace

ChannelValidation validate_channel(const KrausChannel& ch, const Tolerances& tol) {
  tol.check();
  check_shapes(ch);
  Mat sum = Mat::Zero(ch.dim_in, ch.dim_in);
  for (const Mat& e : ch.kraus) {
    sum += e.adjoint() * e;
  }
  const double defect = (sum - identity(ch.dim_in)).norm();
  return ChannelValidation{defect <= tol.orth, defect, std::move(sum)};
}

NoncommutativeGraph graph_of_channel(const KrausChannel& ch, const Tolerances& tol,
                                     bool require_valid) {
  const ChannelValidation v = validate_channel(ch, tol);
  if (require_valid && !v.ok) {
    throw ParameterError("graph_of_channel: channel is not trace preserving (defect " +
                         std::to_string(v.defect_norm) + ")");
  }
  std::vector<Mat> products;
  products.reserve(ch.kraus.size() * ch.kraus.size());
  for (const Mat& ej : ch.kraus) {
    for (const Mat& ek : ch.kraus) {
      products.push_back(ej.adjoint() * ek);
    }
  }
  return NoncommutativeGraph{ch.dim_in, orthonormalize_span(products, ch.dim_in, ch.dim_in, tol)};
}

KrausChannel weyl_channel(Index d) {
  if (d < 2) {
    throw ParameterError("weyl_channel: d must be at least 2");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  KrausChannel ch{d, d, {}};
  ch.kraus.reserve(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) {
    Mat z = Mat::Zero(d, d);
    for (Index j = 0; j < d; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(d);
      z(j, j) = scale * Complex(std::cos(angle), std::sin(angle));
    }
    ch.kraus.push_back(std::move(z));
  }
  return ch;
}

KrausChannel dephasing_bitflip() {
  const auto& p = paulis();
  Mat e0 = Mat::Zero(2, 1);
  e0(0, 0) = 1.0;
  Mat e1 = Mat::Zero(2, 1);
  e1(1, 0) = 1.0;
  KrausChannel ch{2, 4, {}};
  ch.kraus.push_back(0.5 * kron(p[0], e0));
  ch.kraus.push_back(0.5 * kron(p[3], e0));
  ch.kraus.push_back(0.5 * kron(p[0], e1));
  ch.kraus.push_back(0.5 * kron(p[1], e1));
  return ch;
}

KrausChannel depolarizing(double p) {
  if (!(p > 0.0) || p > 4.0 / 3.0) {
    throw ParameterError("depolarizing: p must satisfy 0 < p <= 4/3");
  }
  const auto& s = paulis();
  KrausChannel ch{2, 2, {}};
  ch.kraus.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * s[0]);
  ch.kraus.push_back(0.5 * std::sqrt(p) * s[1]);
  ch.kraus.push_back(0.5 * std::sqrt(p) * s[2]);
  ch.kraus.push_back(0.5 * std::sqrt(p) * s[3]);
  return ch;
}

namespace {

KrausChannel c2c2_sum_channel_impl(double branch_scale) {
  const auto& p = paulis();
  Mat e00 = Mat::Zero(2, 2);
  e00(0, 0) = 1.0;
  Mat e01 = Mat::Zero(2, 2);
  e01(0, 1) = 1.0;
  Mat e10 = Mat::Zero(2, 2);
  e10(1, 0) = 1.0;
  KrausChannel ch{4, 4, {}};
  ch.kraus.push_back(branch_scale * kron(e00, p[0]));
  ch.kraus.push_back(branch_scale * kron(e10, p[1]));
  for (int s = 0; s < 4; ++s) {
    ch.kraus.push_back(0.5 * kron(e01, p[static_cast<std::size_t>(s)]));
  }
  return ch;
}

}  // namespace

KrausChannel c2c2_sum_channel() { return c2c2_sum_channel_impl(1.0 / std::sqrt(2.0)); }

KrausChannel c2c2_sum_channel_raw() { return c2c2_sum_channel_impl(1.0); }

KrausChannel c4c2_sum_channel() {
  const auto& p = paulis();
  Mat e0 = Mat::Zero(2, 1);
  e0(0, 0) = 1.0;
  Mat e1 = Mat::Zero(2, 1);
  e1(1, 0) = 1.0;

  KrausChannel ch{6, 8, {}};
  auto pad_a = [](const Mat& m) {  // 8x4 acting on the first block
    Mat out = Mat::Zero(8, 6);
    out.block(0, 0, 8, 4) = m;
    return out;
  };
  auto pad_b = [](const Mat& m) {  // 8x2 acting on the second block
    Mat out = Mat::Zero(8, 6);
    out.block(0, 4, 8, 2) = m;
    return out;
  };

  ch.kraus.push_back(pad_a(kron(e0, (3.0 / 5.0) * identity(4))));
  for (Index j = 0; j < 4; ++j) {
    for (Index k = 0; k < 4; ++k) {
      Mat w = Mat::Zero(4, 4);
      for (Index m = 0; m < 4; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m * k) / 4.0;
        w((m + j) % 4, m) = 0.2 * Complex(std::cos(angle), std::sin(angle));
      }
      ch.kraus.push_back(pad_a(kron(e1, w)));
    }
  }
  const std::array<Mat, 4> f = {kron(p[0], e0), kron(p[3], e0), kron(p[0], e1), kron(p[1], e1)};
  for (const Mat& fs : f) {
    ch.kraus.push_back(pad_b(kron(e0, 0.5 * fs)));
  }
  return ch;
}

KrausChannel zoo(const std::string& name, std::optional<double> param) {
  if (name == "weyl") {
    if (!param) {
      throw ParameterError("zoo: weyl requires a dimension parameter");
    }
    return weyl_channel(static_cast<Index>(*param));
  }
  if (name == "dephasing-bitflip") {
    return dephasing_bitflip();
  }
  if (name == "depolarizing") {
    return depolarizing(param.value_or(1.0));
  }
  if (name == "c2c2-sum") {
    return c2c2_sum_channel();
  }
  if (name == "c2c2-sum-raw") {
    return c2c2_sum_channel_raw();
  }
  if (name == "c4c2-sum") {
    return c4c2_sum_channel();
  }
  throw ParameterError("zoo: unknown channel name '" + name + "'");
}

std::vector<std::string> zoo_names() {
  return {"weyl", "dephasing-bitflip", "depolarizing", "c2c2-sum", "c2c2-sum-raw", "c4c2-sum"};
}

}  // namespace zecap
