#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liedeg/lie_algebra.hpp"
#include "liedeg/parse.hpp"

namespace liedeg {

struct CatalogEntry {
  LieAlgebra algebra;
  std::optional<int> expected_orbit_dim;  // the published orbit-dimension value
  std::string family;
};

/// A named isomorphism certificate: change_basis(from, matrix) == to.
struct IsoWitness {
  std::string from, to;
  BasisChange matrix;
};

class Catalog {
 public:
  static Catalog load_dir(const std::filesystem::path& dir);

  void add(CatalogEntry entry);

  bool has(const std::string& name) const { return entries_.count(name) != 0; }
  const CatalogEntry& get(const std::string& name) const;
  const LieAlgebra& algebra(const std::string& name) const { return get(name).algebra; }

  std::vector<std::string> names() const;  // sorted
  std::size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, CatalogEntry> entries_;
};

/// File format: line `iso <from> <to>`, then n rows of n rationals.
IsoWitness parse_iso_witness(const std::string& text, std::size_t n);
IsoWitness load_iso_witness(const std::filesystem::path& file, std::size_t n);
std::vector<IsoWitness> load_iso_dir(const std::filesystem::path& dir, std::size_t n);

}  // namespace liedeg
