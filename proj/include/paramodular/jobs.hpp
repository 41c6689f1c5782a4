#pragma once

// Compute jobs behind the command line: which object to expand, by which
// route, to which natural truncation, and how to serialize it.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "paramodular/cache.hpp"
#include "paramodular/series.hpp"
#include "paramodular/table_io.hpp"

namespace paramodular {

/// Invalid user input; the command line maps it to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ObjectKind { Delta5, Delta2, Delta1, DeltaHalf, Delta1Cubed, Eta, Theta, Phi1, Phi2, FTable };
enum class Route { Lift, Product, ThetaSum, ThetaDecomp, ThetaProductGenus2 };
enum class OutputFormat { Json, Csv };

ObjectKind parse_object(const std::string& name);
Route parse_route(const std::string& name);
OutputFormat parse_format(const std::string& name);
std::string to_string(ObjectKind kind);
std::string to_string(Route route);
std::string to_string(OutputFormat format);

/// Routes accepted for an object; the first is the default.
std::vector<Route> valid_routes(ObjectKind kind);
std::vector<std::string> object_names();

struct JobSpec {
    ObjectKind object = ObjectKind::Delta1;
    std::optional<Route> route;    // default route when empty
    std::int64_t q_order = 1;      // natural q-order; scaled by 24
    std::int64_t s_order = 1;      // natural s-order; scaled by 24
    std::int64_t max_n = 10;       // f-table only
    OutputFormat format = OutputFormat::Json;
    std::optional<std::filesystem::path> cache_dir;
};

/// Throws UsageError for an invalid object/route pair or bad orders.
void validate(const JobSpec& spec);
Route effective_route(const JobSpec& spec);

/// Scaled window (24 q_order, 24 s_order); two-variable objects carry ts = 0.
Truncation scaled_truncation(const JobSpec& spec);

CacheKey cache_key(const JobSpec& spec);

CoefficientTable compute_table(const JobSpec& spec);

/// Serialized output, computed directly.
std::string render(const JobSpec& spec);

/// Serialized output through the cache when spec.cache_dir is set. Cache
/// warnings go to `warn`.
std::string render_cached(const JobSpec& spec, std::ostream& warn);

}  // namespace paramodular
