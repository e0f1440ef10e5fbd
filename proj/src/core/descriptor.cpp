#include "core/descriptor.hpp"

#include <charconv>
#include <sstream>

#include "core/error.hpp"

namespace syt {

namespace {

int parse_int(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last || value < 0) {
    fail(Errc::invalid_spec, "bad integer '" + std::string(text) + "' in shape '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<int> parse_list(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_int(text.substr(pos, comma - pos), spec));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

Partition parse_kappa(std::string_view text, std::string_view spec) {
  try {
    return Partition(parse_list(text, spec));
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_spec) throw;
    fail(Errc::invalid_spec, "truncation in '" + std::string(spec) + "': " + e.what());
  }
}

}  // namespace

ShapeDescriptor parse_shape(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    fail(Errc::invalid_spec, "shape '" + std::string(spec) + "' lacks a family prefix");
  }
  const auto head = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  ShapeDescriptor shape;
  if (head == "part" || head == "shifted") {
    shape.family = head == "part" ? ShapeDescriptor::Family::part : ShapeDescriptor::Family::shifted;
    shape.parts = parse_list(body, spec);
    return shape;
  }
  const auto slash = body.find('/');
  const auto size_text = body.substr(0, slash);
  if (slash != std::string_view::npos) shape.kappa = parse_kappa(body.substr(slash + 1), spec);
  if (head == "stair") {
    shape.family = ShapeDescriptor::Family::stair;
    shape.m = parse_int(size_text, spec);
    return shape;
  }
  if (head == "rect") {
    shape.family = ShapeDescriptor::Family::rect;
    const auto x = size_text.find('x');
    if (x == std::string_view::npos) {
      fail(Errc::invalid_spec, "rectangle '" + std::string(spec) + "' must read rect:<m>x<n>");
    }
    shape.m = parse_int(size_text.substr(0, x), spec);
    shape.n = parse_int(size_text.substr(x + 1), spec);
    return shape;
  }
  fail(Errc::invalid_spec, "unknown shape family '" + std::string(head) + "'");
}

std::string ShapeDescriptor::to_string() const {
  std::vector<int> k(kappa.parts().begin(), kappa.parts().end());
  const std::string trunc = k.empty() ? "" : "/" + join(k);
  switch (family) {
    case Family::part: return "part:" + join(parts);
    case Family::shifted: return "shifted:" + join(parts);
    case Family::stair: return "stair:" + std::to_string(m) + trunc;
    case Family::rect: return "rect:" + std::to_string(m) + "x" + std::to_string(n) + trunc;
  }
  return {};
}

CellRegion build_region(const ShapeDescriptor& shape) {
  switch (shape.family) {
    case ShapeDescriptor::Family::part:
      try {
        return CellRegion::ordinary(Partition(shape.parts));
      } catch (const Error& e) {
        fail(Errc::invalid_spec, e.what());
      }
    case ShapeDescriptor::Family::shifted:
      try {
        return CellRegion::shifted(StrictPartition(shape.parts));
      } catch (const Error& e) {
        fail(Errc::invalid_spec, e.what());
      }
    case ShapeDescriptor::Family::stair:
      return CellRegion::truncated_staircase(shape.m, shape.kappa);
    case ShapeDescriptor::Family::rect:
      return CellRegion::truncated_rectangle(shape.m, shape.n, shape.kappa);
  }
  fail(Errc::invalid_spec, "unknown shape family");
}

}  // namespace syt
