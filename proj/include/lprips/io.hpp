#pragma once

#include <iosfwd>
#include <string>

#include "lprips/circle.hpp"
#include "lprips/complexes.hpp"
#include "lprips/magnitude.hpp"
#include "lprips/metric.hpp"
#include "lprips/persistence.hpp"
#include "lprips/stability.hpp"

namespace lprips {

// square distance matrix in CSV form; an optional first row that fails to
// parse as numbers is taken as labels.  `what` names the source in errors.
FiniteMetricSpace parse_space_csv(std::istream& in, bool pseudo, const std::string& what);

// one point per row; geometry is "euclidean", "l1" or "circle" (coordinates
// mod 1 with the geodesic distance, one column)
FiniteMetricSpace parse_points_csv(std::istream& in, const std::string& geometry,
                                   const std::string& what);

FiniteMetricSpace read_space_csv(const std::string& path, bool pseudo);
FiniteMetricSpace read_points_csv(const std::string& path, const std::string& geometry);

// square matrix without the metric checks, for norm evaluation on arbitrary
// admissible entries
DistanceMatrix parse_matrix_csv(std::istream& in, const std::string& what);
DistanceMatrix read_matrix_csv(const std::string& path);

// round-trip decimal form; infinities come out as "inf" / "-inf"
std::string double_token(double v);

// one bar per line: dim <tab> birth <tab> death, death "inf" when essential
std::string barcode_tsv(const Barcode& b);
std::string barcode_json(const Barcode& b);
std::string barcode_svg(const Barcode& b);

std::string filtration_json(const FilteredComplex& F);
std::string tuple_complex_json(const TupleChainComplex& C);

std::string magnitude_json(const MagnitudeResult& r);
std::string les_json(const LesReport& r);
std::string les_sweep_json(const LesSweep& s);
std::string stability_json(const StabilityReport& r);
std::string campaign_json(const StabilityCampaign& c);
std::string circle_json(const CircleReport& r);

}  // namespace lprips
