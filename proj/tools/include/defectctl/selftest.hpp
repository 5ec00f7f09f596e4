#ifndef DEFECTCTL_SELFTEST_HPP_
#define DEFECTCTL_SELFTEST_HPP_

// Regression fixtures checked by `defectctl selftest`. Fixtures are plain
// data so tests can corrupt a cell and watch the run fail on it.

#include <string>
#include <vector>

#include "crysdef/classifier.hpp"
#include "defectctl/report.hpp"

namespace defectctl {

struct PlanarFixture {
  crysdef::Lattice lattice;
  crysdef::Int residue;
  bool finite;
  std::vector<crysdef::Vec2> representatives; // finite
  crysdef::DomainKind domain;                 // infinite
};

struct OracleFixture {
  crysdef::Lattice lattice;
  crysdef::Int n3_lo, n3_hi;
};

struct BinaryFixture {
  crysdef::BinaryKind kind;
  std::size_t order;
  std::size_t class_count; // computed partition, not the published figure
};

struct PuncturedFixture {
  crysdef::Manifold manifold;
  unsigned points;
  unsigned h1;
};

struct CompositeFixture {
  std::string name;
  crysdef::SystemSpec system;
  bool textures;
  bool compactify;
  crysdef::Cardinality expected;
};

struct Fixtures {
  std::vector<PlanarFixture> planar;
  std::vector<OracleFixture> oracle;
  std::vector<BinaryFixture> binary;
  std::vector<PuncturedFixture> punctured;
  std::vector<CompositeFixture> composite;
};

Fixtures default_fixtures();

struct CellResult {
  std::string cell;
  bool pass;
  std::string detail;
};

std::string planar_cell_name(crysdef::Lattice l, crysdef::Int residue, crysdef::Int modulus);

std::vector<CellResult> run_selftest(const Fixtures& fx, crysdef::Int window);

Json selftest_report(const std::vector<CellResult>& cells, crysdef::Int window);

} // namespace defectctl

#endif
