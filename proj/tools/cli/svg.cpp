//
// Copyright 2026 The augmitl Authors
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
//

#include "svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace augmitl::cli {

namespace {

constexpr double kWidth = 800;
constexpr double kHeight = 500;
constexpr double kLeft = 60;
constexpr double kRight = 620;  // plot area ends here; legend to the right
constexpr double kTop = 40;
constexpr double kBottom = 440;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

double x_of(double fraction) { return kLeft + fraction * (kRight - kLeft); }
double y_of(double f1) { return kBottom - f1 * (kBottom - kTop); }

}  // namespace

std::string sweep_svg(const SweepReport& r) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
    << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
    << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"24\" text-anchor=\"middle\" "
       "font-size=\"14\">Weighted F1 by fraction of original training data</text>\n";

  // Grid and ticks every 0.2 on both axes.
  for (int i = 0; i <= 5; ++i) {
    const double t = i * 0.2;
    o << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(y_of(t)) << "\" x2=\""
      << num(kRight) << "\" y2=\"" << num(y_of(t))
      << "\" stroke=\"#dddddd\"/>\n";
    o << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y_of(t) + 4)
      << "\" text-anchor=\"end\">" << num(t) << "</text>\n";
    o << "<line x1=\"" << num(x_of(t)) << "\" y1=\"" << num(kTop) << "\" x2=\""
      << num(x_of(t)) << "\" y2=\"" << num(kBottom)
      << "\" stroke=\"#dddddd\"/>\n";
    o << "<text x=\"" << num(x_of(t)) << "\" y=\"" << num(kBottom + 18)
      << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
  }
  o << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\""
    << num(kRight - kLeft) << "\" height=\"" << num(kBottom - kTop)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  o << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"" << num(kBottom + 40)
    << "\" text-anchor=\"middle\">fraction of training seeds</text>\n";
  o << "<text x=\"16\" y=\"" << num((kTop + kBottom) / 2)
    << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << num((kTop + kBottom) / 2) << ")\">weighted F1</text>\n";

  std::size_t i = 0;
  for (const std::string& variant : r.variants) {
    const char* color = kPalette[i % kPalette.size()];
    auto it = r.curves.find(variant);
    if (it == r.curves.end()) continue;
    o << "<g class=\"series\" data-variant=\"" << escape(variant) << "\">\n";
    o << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const CurvePoint& p : it->second) {
      if (!first) o << ' ';
      first = false;
      o << num(x_of(p.fraction)) << ',' << num(y_of(p.mean_f1));
    }
    o << "\"/>\n";
    for (const CurvePoint& p : it->second) {
      o << "<circle cx=\"" << num(x_of(p.fraction)) << "\" cy=\""
        << num(y_of(p.mean_f1)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    o << "</g>\n";

    const double ly = kTop + 10 + 20 * static_cast<double>(i);
    o << "<line x1=\"640\" y1=\"" << num(ly) << "\" x2=\"670\" y2=\"" << num(ly)
      << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"676\" y=\"" << num(ly + 4) << "\">" << escape(variant)
      << "</text>\n";
    ++i;
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace augmitl::cli
