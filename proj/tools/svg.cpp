#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

namespace qcli {

namespace {

constexpr double kWidth = 640, kHeight = 420, kMargin = 56;
const char* const kColors[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#7f7f7f"};

}  // namespace

void write_svg(std::ostream& os, const Table& t, const std::string& title, bool log_x) {
  const auto fx = [&](double x) { return log_x ? std::log10(x) : x; };
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& r : t.rows) {
    x0 = std::min(x0, fx(r[0]));
    x1 = std::max(x1, fx(r[0]));
    for (std::size_t c = 1; c < r.size(); ++c) {
      if (!std::isfinite(r[c])) continue;
      y0 = std::min(y0, r[c]);
      y1 = std::max(y1, r[c]);
    }
  }
  if (!(x1 > x0)) x1 = x0 + 1;
  if (!(y1 > y0)) y1 = y0 + 1;
  const auto px = [&](double x) { return kMargin + (fx(x) - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  const auto py = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
  os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin << "\" height=\""
     << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (y0 < 0 && y1 > 0) {
    os << "<line x1=\"" << kMargin << "\" x2=\"" << kWidth - kMargin << "\" y1=\"" << py(0) << "\" y2=\"" << py(0)
       << "\" stroke=\"#bbb\"/>\n";
  }
  os << "<text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin + 18 << "\" font-size=\"11\">"
     << number(t.rows.front()[0]) << "</text>\n";
  os << "<text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin + 18
     << "\" font-size=\"11\" text-anchor=\"end\">" << number(t.rows.back()[0]) << "</text>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 14 << "\" font-size=\"12\" text-anchor=\"middle\">"
     << t.columns[0] << (log_x ? " (log)" : "") << "</text>\n";
  os << "<text x=\"" << kMargin - 6 << "\" y=\"" << py(y1) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
     << number(y1) << "</text>\n";
  os << "<text x=\"" << kMargin - 6 << "\" y=\"" << py(y0) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
     << number(y0) << "</text>\n";

  for (std::size_t c = 1; c < t.columns.size(); ++c) {
    const char* color = kColors[(c - 1) % std::size(kColors)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& r : t.rows) {
      if (std::isfinite(r[c])) os << number(px(r[0])) << ',' << number(py(r[c])) << ' ';
    }
    os << "\"/>\n";
    os << "<text x=\"" << kWidth - kMargin - 4 << "\" y=\"" << kMargin + 14 * c << "\" font-size=\"11\" fill=\""
       << color << "\" text-anchor=\"end\">" << t.columns[c] << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace qcli
