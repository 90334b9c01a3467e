#include "weightss/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "weightss/io.hpp"

namespace weightss::cli {

namespace {

struct OutputOptions {
    std::string format = "text";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts)
{
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--out", opts.out_path, "write the report to a file");
}

int emit(const io::json& report, const OutputOptions& opts)
{
    std::string body =
        opts.format == "json" ? report.dump(2) + "\n" : io::render_text(report);
    if (opts.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << opts.out_path << "\n";
            return 2;
        }
        out << body;
    }
    return 0;
}

hr::WeightResult compute_compact(const io::InputDocument& doc, const std::string& name)
{
    const hr::HyperresolutionInput& h = doc.variety(name);
    if (!h.compact)
        throw hr::HyperresError("variety '" + name +
                                "' is non-compact; compute it through a pair");
    return hr::weight_compact(h);
}

}  // namespace

int run(int argc, const char* const* argv)
{
    CLI::App app{"weight spectral sequences of real algebraic varieties presented "
                 "as cubical diagrams of simplicial models"};
    app.require_subcommand(1);

    std::string input_path, variety_name, pair_name, product_name;
    OutputOptions opts;
    io::ComputeFlags flags;
    bool any_section = false;

    CLI::App* cmd_validate = app.add_subcommand("validate", "validate every variety");
    cmd_validate->add_option("input", input_path, "input document")->required();
    add_output_options(cmd_validate, opts);

    CLI::App* cmd_compute =
        app.add_subcommand("compute", "weight pages and invariants of one variety");
    cmd_compute->add_option("input", input_path, "input document")->required();
    cmd_compute->add_option("variety", variety_name, "variety name")->required();
    bool f_pages = false, f_filt = false, f_betti = false, f_purity = false,
         f_duality = false, f_cup = false;
    cmd_compute->add_flag("--pages", f_pages, "weight page tables");
    cmd_compute->add_flag("--filtration", f_filt, "weight filtration table");
    cmd_compute->add_flag("--betti", f_betti, "virtual Betti numbers");
    cmd_compute->add_flag("--purity", f_purity, "purity check");
    cmd_compute->add_flag("--duality", f_duality, "duality report");
    cmd_compute->add_flag("--cup-check", f_cup, "cup filtration check");
    add_output_options(cmd_compute, opts);

    CLI::App* cmd_pair =
        app.add_subcommand("pair", "additivity report for a closed pair");
    cmd_pair->add_option("input", input_path, "input document")->required();
    cmd_pair->add_option("pair", pair_name, "pair name")->required();
    add_output_options(cmd_pair, opts);

    CLI::App* cmd_product =
        app.add_subcommand("product", "Kunneth and multiplicativity report");
    cmd_product->add_option("input", input_path, "input document")->required();
    cmd_product->add_option("product", product_name, "product name")->required();
    add_output_options(cmd_product, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        io::InputDocument doc = io::load_input(input_path);

        if (cmd_validate->parsed()) {
            io::json reports = io::json::array();
            bool all_ok = true;
            for (auto& [name, h] : doc.varieties) {
                hr::ValidationReport rep = hr::validate(h);
                all_ok = all_ok && rep.ok();
                reports.push_back(io::validation_report_json(name, rep));
            }
            int code = emit(reports, opts);
            return code != 0 ? code : (all_ok ? 0 : 1);
        }

        if (cmd_compute->parsed()) {
            any_section = f_pages || f_filt || f_betti || f_purity || f_duality || f_cup;
            if (any_section) {
                flags.pages = f_pages;
                flags.filtration = f_filt;
                flags.betti = f_betti;
                flags.purity = f_purity;
                flags.duality = f_duality;
                flags.cup_check = f_cup;
            }
            hr::WeightResult r = compute_compact(doc, variety_name);
            return emit(io::variety_report(variety_name, r, flags), opts);
        }

        if (cmd_pair->parsed()) {
            auto it = doc.pairs.find(pair_name);
            if (it == doc.pairs.end())
                throw io::SchemaError("unknown pair '" + pair_name + "'");
            const io::InputDocument::Pair& pr = it->second;
            hr::WeightResult x = compute_compact(doc, pr.x);
            hr::WeightResult z = compute_compact(doc, pr.z);
            hr::WeightResult u =
                hr::weight_open(doc.variety(pr.x), doc.variety(pr.z), pr.glue);
            return emit(io::pair_report(pair_name, x, z, u), opts);
        }

        if (cmd_product->parsed()) {
            auto it = doc.products.find(product_name);
            if (it == doc.products.end())
                throw io::SchemaError("unknown product '" + product_name + "'");
            const io::InputDocument::Product& pr = it->second;
            hr::WeightResult x = compute_compact(doc, pr.x);
            hr::WeightResult y = compute_compact(doc, pr.y);
            hr::WeightResult xy = compute_compact(doc, pr.xy);
            inv::KunnethReport kn =
                inv::kunneth_check(hr::weight_filtered_complex(doc.variety(pr.x)),
                                   hr::weight_filtered_complex(doc.variety(pr.y)),
                                   hr::weight_filtered_complex(doc.variety(pr.xy)));
            return emit(io::product_report(product_name, x, y, xy, kn), opts);
        }
    } catch (const io::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace weightss::cli
