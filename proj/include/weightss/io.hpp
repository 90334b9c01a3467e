#ifndef WEIGHTSS_IO_HPP
#define WEIGHTSS_IO_HPP

#include <json.hpp>

#include "weightss/invariants.hpp"

namespace weightss::io {

using nlohmann::json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputDocument {
    struct Pair {
        std::string x, z;
        hr::GlueMap glue;
    };
    struct Product {
        std::string x, y, xy;
    };

    std::map<std::string, hr::HyperresolutionInput> varieties;
    std::map<std::string, Pair> pairs;
    std::map<std::string, Product> products;

    const hr::HyperresolutionInput& variety(const std::string& name) const;
};

/// Strict parse: unknown fields are rejected.
InputDocument parse_input(const json& j);
InputDocument load_input(const std::string& path);

struct ComputeFlags {
    bool pages = true;
    bool filtration = true;
    bool betti = true;
    bool purity = true;
    bool duality = true;
    bool cup_check = true;
};

json validation_report_json(const std::string& name, const hr::ValidationReport& rep);
json variety_report(const std::string& name, const hr::WeightResult& r,
                    const ComputeFlags& flags);
json pair_report(const std::string& name, const hr::WeightResult& x,
                 const hr::WeightResult& z, const hr::WeightResult& u);
json product_report(const std::string& name, const hr::WeightResult& x,
                    const hr::WeightResult& y, const hr::WeightResult& xy,
                    const inv::KunnethReport& kn);

std::string render_text(const json& report);

}  // namespace weightss::io

#endif
