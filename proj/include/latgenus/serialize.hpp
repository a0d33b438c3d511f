#pragma once

#include <json.hpp>

#include "latgenus/class_group.hpp"
#include "latgenus/genus.hpp"
#include "latgenus/zariski.hpp"

namespace latgenus {

using json = nlohmann::ordered_json;

// [a, b, c]
json to_json(const BQForm& f);
// [[m00, m01], [m10, m11]]
json to_json(const Unimodular& g);
// {D_K, den, basis: [[p, q], [r, s]]} with rows (p + q w)/den, (r + s w)/den
json to_json(const Grid& g);
// {d, h, structure, classes: [[a,b,c], ...]}
json to_json(const ClassGroup& g);
// {index, dynkin, t1, t2, d, m, d0, checks..., passed}
json to_json(const RowReport& r);
// {m, d0, f, classes, sqrt, ideals, flags, verified}
json to_json(const ConjugationCertificate& c);
// {d, m, genus: [[a,b,c], ...], g_sl2, g_gl2, certificate}
json genus_report_json(const BQForm& f, long long max_radius = 1000);

} // namespace latgenus
