#pragma once

#include <map>
#include <string>
#include <vector>

#include "sturmian/cf.hpp"
#include "sturmian/complexity.hpp"
#include "sturmian/jarnik.hpp"
#include "sturmian/spectral.hpp"

namespace sturmian {

// Shortest-faithful decimal rendering (%.17g): equal doubles always render
// to equal bytes, so reports are reproducible byte-for-byte.
std::string fmt_double(double v);

// A rendered report: pre-formatted cells plus key=value metadata (resolved
// configuration, provenance, summary scalars). CSV prints the metadata as
// leading '# key=value' lines; JSON carries it as an object.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::map<std::string, std::string> meta;
};

std::string to_csv(const Table& table);
std::string to_json_string(const Table& table);

// Provenance keys (slope kind, entries preview, synthesis parameters) merged
// into the metadata block.
void embed_provenance(Table& table, const ContinuedFraction& cf);

Table tabulate(const AlphaTypeReport& r);
Table tabulate(const RepetitivityTable& r);
Table tabulate(const RepulsivenessTable& r);
Table tabulate(const PowerTable& r);
Table tabulate(const EquivalenceReport& r);
Table tabulate(const PsiSeries& r);
Table tabulate(const RegularityReport& r);
Table tabulate(const FinitenessReport& r);
Table tabulate(const std::vector<JarnikRow>& rows, double beta, double c);
Table tabulate(const ExactBetaProfile& r);
Table tabulate(const BoxDimensionReport& r);
Table tabulate(const LebesgueReport& r);

} // namespace sturmian
