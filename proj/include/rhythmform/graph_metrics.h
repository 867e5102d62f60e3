// Degree correlation, power-law fit, assortativity and transitivity.

#pragma once

#include <map>
#include <optional>

#include "rhythmform/visibility.h"

namespace rhythmform {

/// k -> mean over degree-k nodes of their mean neighbour degree. Degree-0
/// nodes are skipped; an edgeless graph yields an empty map.
std::map<int, double> degreeCorrelation(const Graph& g);

struct PowerLawFit {
  double a = 0.0;  // prefactor
  double b = 0.0;  // exponent (log-log slope)
};

/// Least squares on (ln k, ln k_m). nullopt with fewer than two usable points.
std::optional<PowerLawFit> powerlawFit(const std::map<int, double>& correlation);

/// Pearson correlation of endpoint degrees over both orientations of every
/// edge. nullopt when there are no edges or the degree variance is zero.
std::optional<double> assortativity(const Graph& g);

/// 3 * triangles / connected triples; 0 when there are no triples.
double transitivity(const Graph& g);

std::size_t triangleCount(const Graph& g);

}  // namespace rhythmform
