#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "springsel/mechanics.hpp"

namespace springsel {

/// Missing or unreadable catalogue header.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rejection {
  std::size_t line = 0;
  std::string reason;
};

struct CatalogueMeta {
  std::string origin;
  std::size_t rows_read = 0;
  std::vector<Rejection> rejections;
};

struct Catalogue {
  std::vector<CatalogueEntry> entries;  // ids ascending
  CatalogueMeta meta;
};

inline constexpr const char* kCatalogueHeader = "do_mm,d_mm,l0_mm,r_n_per_mm,material,ends,price";

/// Reads the CSV catalogue. Bad rows are logged in meta.rejections and
/// skipped; ids are the 1-based data row numbers.
Catalogue parse_catalogue(std::istream& in, std::string origin = "stream");
Catalogue load_catalogue(const std::filesystem::path& path);

/// Writes the entries back out; values round-trip exactly.
void write_catalogue(std::ostream& out, std::span<const CatalogueEntry> entries);

/// The springs named in the two published case studies, in this order:
/// clamping pin manual pick, clamping pin multicriteria pick, clamping pin
/// fuzzy pick, sensor manual pick, sensor multicriteria pick, sensor fuzzy pick.
std::vector<CatalogueEntry> reference_springs();

/// Fictitious list price, proportional to wire mass.
double synthetic_price(const CatalogueEntry& entry);

/// Deterministic catalogue of `count` entries: the reference springs first,
/// then random stock springs.
Catalogue generate_synthetic(std::uint64_t seed, std::size_t count);

}  // namespace springsel
