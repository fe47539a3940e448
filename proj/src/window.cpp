#include "arrowknot/window.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace arrowknot {

namespace {

Marking parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  Marking v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad marking '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

MarkingWindow::MarkingWindow(Marking K, std::vector<Marking> allowed) : K_(K), allowed_(std::move(allowed)) {
  std::sort(allowed_.begin(), allowed_.end());
  allowed_.erase(std::unique(allowed_.begin(), allowed_.end()), allowed_.end());
}

MarkingWindow MarkingWindow::parse(Marking K, std::string_view text) {
  std::vector<Marking> values;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    const Marking lo = parse_int(text.substr(0, dots));
    const Marking hi = parse_int(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty marking range " + std::string(text));
    if (hi - lo > 1000) throw std::invalid_argument("marking range too large: " + std::string(text));
    for (Marking m = lo; m <= hi; ++m) values.push_back(m);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      values.push_back(parse_int(text.substr(start, comma - start)));
      start = comma + 1;
    }
  }
  return MarkingWindow(K, std::move(values));
}

bool MarkingWindow::contains(Marking m) const {
  return std::binary_search(allowed_.begin(), allowed_.end(), m);
}

bool MarkingWindow::reflection_closed() const {
  return std::all_of(allowed_.begin(), allowed_.end(), [&](Marking m) { return contains(K_ - m); });
}

std::string MarkingWindow::to_string() const {
  std::string out = "K=" + std::to_string(K_) + " markings=";
  for (std::size_t i = 0; i < allowed_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(allowed_[i]);
  }
  return out;
}

}  // namespace arrowknot
