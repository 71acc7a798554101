#include "liedeg/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace liedeg {

namespace {
std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
}  // namespace

Catalog Catalog::load_dir(const std::filesystem::path& dir) {
  Catalog cat;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".alg") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    ParsedAlgebra pa;
    try {
      pa = parse_algebra_full(read_file(f));
    } catch (const ParseError& e) {
      throw std::runtime_error(f.string() + ": " + e.what());
    }
    if (pa.algebra.name().empty())
      throw std::runtime_error(f.string() + ": catalog entry needs a name");
    cat.add({pa.algebra, pa.expected_orbit_dim, pa.family});
  }
  return cat;
}

void Catalog::add(CatalogEntry entry) {
  std::string name = entry.algebra.name();
  if (entries_.count(name)) throw std::runtime_error("duplicate catalog name " + name);
  entries_.emplace(std::move(name), std::move(entry));
}

const CatalogEntry& Catalog::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw std::out_of_range("unknown catalog name " + name);
  return it->second;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, v] : entries_) out.push_back(k);
  return out;
}

IsoWitness parse_iso_witness(const std::string& text, std::size_t n) {
  std::istringstream is(text);
  std::string line;
  IsoWitness w;
  std::vector<std::string> rows;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "iso") {
      if (!(ls >> w.from >> w.to)) throw std::runtime_error("iso line needs <from> <to>");
    } else {
      rows.push_back(line);
    }
  }
  if (w.from.empty()) throw std::runtime_error("missing 'iso <from> <to>' line");
  w.matrix = parse_matrix_rows(rows, n);
  return w;
}

IsoWitness load_iso_witness(const std::filesystem::path& file, std::size_t n) {
  return parse_iso_witness(read_file(file), n);
}

std::vector<IsoWitness> load_iso_dir(const std::filesystem::path& dir, std::size_t n) {
  std::vector<IsoWitness> out;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".iso") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    try {
      out.push_back(load_iso_witness(f, n));
    } catch (const std::exception& e) {
      throw std::runtime_error(f.string() + ": " + e.what());
    }
  }
  return out;
}

}  // namespace liedeg
