#include <algorithm>
#include <cmath>
#include <cstdio>

#include "kaclab/error.hpp"
#include "kaclab/experiments.hpp"

namespace kaclab {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string sweep_csv_header() {
  return "N,beta,delta,H_per_particle,numerator_per_particle,ratio,"
         "ratio_lower_bound,paper_bound_per_particle,eps0,eps1,eps2,"
         "runtime_seconds\n";
}

std::string sweep_csv_row(const SweepRecord& r) {
  std::string s = std::to_string(r.N);
  for (double x : {r.beta, r.delta, r.H_per_particle, r.numerator_per_particle,
                   r.ratio, r.ratio_lower_bound, r.paper_bound_per_particle,
                   r.eps0, r.eps1, r.eps2, r.runtime_seconds}) {
    s += ',';
    s += format_double(x);
  }
  return s + '\n';
}

namespace {

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::string loglog_svg(const std::string& title, const LogLogSeries& data,
                       const LogLogSeries& reference) {
  require(!data.x.empty() && data.x.size() == data.y.size(), ErrorCode::kDomain,
          "loglog_svg: empty or ragged series");
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto* s : {&data, &reference}) {
    for (std::size_t i = 0; i < s->x.size(); ++i) {
      require(s->x[i] > 0.0 && s->y[i] > 0.0, ErrorCode::kDomain,
              "loglog_svg: values must be positive");
      x0 = std::min(x0, std::log10(s->x[i]));
      x1 = std::max(x1, std::log10(s->x[i]));
      y0 = std::min(y0, std::log10(s->y[i]));
      y1 = std::max(y1, std::log10(s->y[i]));
    }
  }
  x0 = std::floor(x0);
  x1 = std::max(std::ceil(x1), x0 + 1.0);
  y0 = std::floor(y0);
  y1 = std::max(std::ceil(y1), y0 + 1.0);

  constexpr double W = 640, H = 480, L = 70, R = 20, T = 40, B = 50;
  auto px = [&](double v) { return L + (std::log10(v) - x0) / (x1 - x0) * (W - L - R); };
  auto py = [&](double v) { return H - B - (std::log10(v) - y0) / (y1 - y0) * (H - T - B); };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
       "viewBox=\"0 0 640 480\">\n";
  s += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">" + title + "</text>\n";
  s += "<rect x=\"" + fixed(L) + "\" y=\"" + fixed(T) + "\" width=\"" + fixed(W - L - R) +
       "\" height=\"" + fixed(H - T - B) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double e = x0; e <= x1 + 0.5; e += 1.0) {
    const double x = px(std::pow(10.0, e));
    s += "<line x1=\"" + fixed(x) + "\" y1=\"" + fixed(H - B) + "\" x2=\"" + fixed(x) +
         "\" y2=\"" + fixed(T) + "\" stroke=\"#ddd\"/>\n";
    s += "<text x=\"" + fixed(x) + "\" y=\"" + fixed(H - B + 18) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">1e" +
         std::to_string(static_cast<int>(e)) + "</text>\n";
  }
  for (double e = y0; e <= y1 + 0.5; e += 1.0) {
    const double y = py(std::pow(10.0, e));
    s += "<line x1=\"" + fixed(L) + "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(W - R) +
         "\" y2=\"" + fixed(y) + "\" stroke=\"#ddd\"/>\n";
    s += "<text x=\"" + fixed(L - 6) + "\" y=\"" + fixed(y + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">1e" +
         std::to_string(static_cast<int>(e)) + "</text>\n";
  }
  auto polyline = [&](const LogLogSeries& ser, const char* style) {
    std::string pts;
    for (std::size_t i = 0; i < ser.x.size(); ++i) {
      if (i) pts += ' ';
      pts += fixed(px(ser.x[i])) + "," + fixed(py(ser.y[i]));
    }
    return "<polyline fill=\"none\" " + std::string(style) + " points=\"" + pts + "\"/>\n";
  };
  if (!reference.x.empty()) {
    s += polyline(reference, "stroke=\"#c33\" stroke-dasharray=\"6,4\"");
  }
  s += polyline(data, "stroke=\"#236\" stroke-width=\"2\"");
  for (std::size_t i = 0; i < data.x.size(); ++i) {
    s += "<circle cx=\"" + fixed(px(data.x[i])) + "\" cy=\"" + fixed(py(data.y[i])) +
         "\" r=\"3.5\" fill=\"#236\"/>\n";
  }
  s += "<text x=\"" + fixed((L + W - R) / 2) + "\" y=\"" + fixed(H - 10) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">N</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace kaclab
