#include "springsel/catalogue.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <string_view>

namespace springsel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(out);
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ec == std::errc{} ? ptr : buf.data());
}

// Uniform double in [0, 1) from the top 53 bits; stable across standard libraries.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }

double round_to(double v, double step) { return std::round(v / step) * step; }

double round_significant(double v, int digits) {
  const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(v))));
  return std::round(v * scale) / scale;
}

}  // namespace

Catalogue parse_catalogue(std::istream& in, std::string origin) {
  Catalogue cat;
  cat.meta.origin = std::move(origin);

  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    if (trim(line) != kCatalogueHeader) {
      throw FormatError("catalogue header must be '" + std::string(kCatalogueHeader) + "'");
    }
    have_header = true;
    break;
  }
  if (!have_header) throw FormatError("catalogue is missing its header row");

  std::size_t row = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    ++row;
    ++cat.meta.rows_read;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      fields.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    auto reject = [&](std::string reason) { cat.meta.rejections.push_back({line_no, std::move(reason)}); };
    if (fields.size() != 7) {
      reject("expected 7 fields, found " + std::to_string(fields.size()));
      continue;
    }

    CatalogueEntry e;
    e.id = static_cast<std::uint32_t>(row);
    if (!parse_double(fields[0], e.Do) || !parse_double(fields[1], e.d) || !parse_double(fields[2], e.L0) ||
        !parse_double(fields[3], e.R) || !parse_double(fields[6], e.price)) {
      reject("malformed number");
      continue;
    }
    const auto mat = parse_material(fields[4]);
    if (!mat) {
      reject("unknown material '" + std::string(fields[4]) + "'");
      continue;
    }
    const auto ends = parse_end_type(fields[5]);
    if (!ends) {
      reject("unknown end type '" + std::string(fields[5]) + "'");
      continue;
    }
    e.material = *mat;
    e.ends = *ends;
    try {
      derive_geometry(e, material(e.material));
    } catch (const GeometryError& err) {
      reject(std::string("GeometryError: ") + err.what());
      continue;
    }
    cat.entries.push_back(e);
  }
  return cat;
}

Catalogue load_catalogue(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open catalogue '" + path.string() + "'");
  return parse_catalogue(in, path.string());
}

void write_catalogue(std::ostream& out, std::span<const CatalogueEntry> entries) {
  out << kCatalogueHeader << '\n';
  for (const CatalogueEntry& e : entries) {
    out << format_double(e.Do) << ',' << format_double(e.d) << ',' << format_double(e.L0) << ','
        << format_double(e.R) << ',' << to_string(e.material) << ',' << to_string(e.ends) << ','
        << format_double(e.price) << '\n';
  }
}

double synthetic_price(const CatalogueEntry& entry) {
  const Material& mat = material(entry.material);
  const DerivedGeometry g = derive_geometry(entry, mat);
  const double per_gram = entry.material == MaterialId::stainless ? 0.03 : 0.012;
  return round_to(0.15 + per_gram * spring_mass_g(g, entry, mat), 0.01);
}

std::vector<CatalogueEntry> reference_springs() {
  using enum MaterialId;
  const EndType cg = EndType::closed_ground;
  std::vector<CatalogueEntry> springs = {
      {0, 36.0, 2.5, 50.0, 3.54, steel, cg, 0.0},
      {0, 32.0, 2.2, 25.0, 5.78, steel, cg, 0.0},
      {0, 32.0, 2.2, 32.0, 4.34, steel, cg, 0.0},
      {0, 12.5, 1.25, 100.0, 0.8, steel, cg, 0.0},
      {0, 11.0, 0.9, 100.0, 0.3, steel, cg, 0.0},
      {0, 11.0, 1.0, 100.0, 0.374, stainless, cg, 0.0},
  };
  std::uint32_t id = 1;
  for (CatalogueEntry& s : springs) {
    s.id = id++;
    s.price = synthetic_price(s);
  }
  return springs;
}

Catalogue generate_synthetic(std::uint64_t seed, std::size_t count) {
  Catalogue cat;
  cat.meta.origin = "synthetic(seed=" + std::to_string(seed) + ", count=" + std::to_string(count) + ")";
  cat.entries = reference_springs();
  if (cat.entries.size() > count) cat.entries.resize(count);

  std::mt19937_64 rng(seed);
  while (cat.entries.size() < count) {
    CatalogueEntry e;
    e.d = std::max(0.2, round_to(0.2 * std::pow(40.0, unit(rng)), 0.01));
    const double C = uniform(rng, 4.0, 16.0);
    e.Do = round_to(C * e.d + e.d, 0.1);
    const double D = e.Do - e.d;
    e.L0 = std::max(1.0, round_to(uniform(rng, 1.0, 10.0) * D, 0.5));
    e.material = unit(rng) < 0.8 ? MaterialId::steel : MaterialId::stainless;
    e.ends = unit(rng) < 0.7 ? EndType::closed_ground : EndType::closed;
    const double solid_fraction = uniform(rng, 0.12, 0.6);
    const double extra = e.ends == EndType::closed_ground ? 0.0 : 1.0;
    const double n = solid_fraction * e.L0 / e.d - kDeadCoils - extra;
    if (n < 1.5) continue;
    const Material& mat = material(e.material);
    e.R = round_significant(mat.G * std::pow(e.d, 4) / (8.0 * std::pow(D, 3) * n), 3);
    try {
      e.price = 0.0;
      e.price = synthetic_price(e);
    } catch (const GeometryError&) {
      continue;
    }
    e.id = static_cast<std::uint32_t>(cat.entries.size() + 1);
    cat.entries.push_back(e);
  }
  cat.meta.rows_read = cat.entries.size();
  return cat;
}

}  // namespace springsel
