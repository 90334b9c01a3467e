#include "weightss/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace weightss::io {

namespace {

void expect_keys(const json& j, const std::string& where,
                 const std::set<std::string>& allowed,
                 const std::set<std::string>& required)
{
    if (!j.is_object())
        throw SchemaError(where + ": object expected");
    for (auto& [key, value] : j.items())
        if (!allowed.count(key))
            throw SchemaError(where + ": unknown field '" + key + "'");
    for (const std::string& key : required)
        if (!j.count(key))
            throw SchemaError(where + ": missing field '" + key + "'");
}

simp::SimplicialModel parse_model(const json& j, const std::string& where)
{
    expect_keys(j, where, {"vertices", "simplices"}, {"vertices", "simplices"});
    if (!j["vertices"].is_number_integer())
        throw SchemaError(where + ".vertices: integer expected");
    int nverts = j["vertices"].get<int>();
    std::vector<std::vector<int>> maximal;
    for (const json& s : j["simplices"]) {
        std::vector<int> simplex = s.get<std::vector<int>>();
        if (!std::is_sorted(simplex.begin(), simplex.end()))
            throw SchemaError(where + ".simplices: vertex lists must be sorted");
        maximal.push_back(std::move(simplex));
    }
    try {
        return simp::SimplicialModel(nverts, maximal);
    } catch (const simp::SimplicialError& e) {
        throw SchemaError(where + ": " + e.what());
    }
}

simp::SimplicialMap parse_vertex_map(const json& j, int src_vertices, int dst_vertices,
                                     const std::string& where)
{
    if (!j.is_object())
        throw SchemaError(where + ": vertex dictionary expected");
    simp::SimplicialMap f;
    f.vertex_map.assign(src_vertices, -1);
    for (auto& [key, value] : j.items()) {
        int v;
        try {
            v = std::stoi(key);
        } catch (...) {
            throw SchemaError(where + ": bad vertex key '" + key + "'");
        }
        if (v < 0 || v >= src_vertices)
            throw SchemaError(where + ": vertex " + key + " out of range");
        if (!value.is_number_integer())
            throw SchemaError(where + ": image of vertex " + key + " must be an integer");
        int img = value.get<int>();
        if (img < 0 || img >= dst_vertices)
            throw SchemaError(where + ": image of vertex " + key + " out of range");
        f.vertex_map[v] = img;
    }
    for (int v = 0; v < src_vertices; ++v)
        if (f.vertex_map[v] < 0)
            throw SchemaError(where + ": vertex " + std::to_string(v) + " has no image");
    return f;
}

cx::SubsetMask parse_mask(const std::string& key, int n, const std::string& where)
{
    cx::SubsetMask mask = 0;
    std::istringstream is(key);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        int e;
        try {
            e = std::stoi(tok);
        } catch (...) {
            throw SchemaError(where + ": bad subset '" + key + "'");
        }
        if (e < 1 || e > n)
            throw SchemaError(where + ": subset element " + tok + " outside 1.." +
                              std::to_string(n));
        mask |= cx::SubsetMask{1} << (e - 1);
    }
    if (mask == 0)
        throw SchemaError(where + ": empty subset '" + key + "'");
    return mask;
}

hr::HyperresolutionInput parse_variety(const json& j, const std::string& where)
{
    expect_keys(j, where,
                {"dim", "compact", "cube", "base", "pieces", "face_maps", "augmentations"},
                {"dim", "compact", "cube", "base", "pieces", "augmentations"});
    hr::HyperresolutionInput h;
    h.dim_x = j["dim"].get<int>();
    h.compact = j["compact"].get<bool>();
    h.n = j["cube"].get<int>();
    if (h.n < 1 || h.n > 20)
        throw SchemaError(where + ".cube: size out of range");
    h.base = parse_model(j["base"], where + ".base");

    for (auto& [key, value] : j["pieces"].items()) {
        cx::SubsetMask mask = parse_mask(key, h.n, where + ".pieces");
        h.pieces.emplace(mask, parse_model(value, where + ".pieces[" + key + "]"));
    }
    if (j.count("face_maps"))
        for (auto& [key, value] : j["face_maps"].items()) {
            auto arrow = key.find("->");
            if (arrow == std::string::npos)
                throw SchemaError(where + ".face_maps: key '" + key +
                                  "' is not of the form S->T");
            cx::SubsetMask s = parse_mask(key.substr(0, arrow), h.n, where + ".face_maps");
            cx::SubsetMask t = parse_mask(key.substr(arrow + 2), h.n, where + ".face_maps");
            if ((t & s) != t || __builtin_popcount(s) != __builtin_popcount(t) + 1)
                throw SchemaError(where + ".face_maps: '" + key +
                                  "' is not a codimension-one face");
            h.face_maps.emplace(std::make_pair(s, t),
                                parse_vertex_map(value, h.piece(s).vertex_count(),
                                                 h.piece(t).vertex_count(),
                                                 where + ".face_maps[" + key + "]"));
        }
    for (auto& [key, value] : j["augmentations"].items()) {
        cx::SubsetMask s = parse_mask(key, h.n, where + ".augmentations");
        if (__builtin_popcount(s) != 1)
            throw SchemaError(where + ".augmentations: '" + key + "' is not a singleton");
        h.augmentations.emplace(
            s, parse_vertex_map(value, h.piece(s).vertex_count(), h.base.vertex_count(),
                                where + ".augmentations[" + key + "]"));
    }
    return h;
}

}  // namespace

const hr::HyperresolutionInput& InputDocument::variety(const std::string& name) const
{
    auto it = varieties.find(name);
    if (it == varieties.end())
        throw SchemaError("unknown variety '" + name + "'");
    return it->second;
}

InputDocument parse_input(const json& j)
{
    expect_keys(j, "document", {"schema_version", "varieties", "pairs", "products"},
                {"schema_version", "varieties"});
    if (j["schema_version"].get<std::string>() != "1")
        throw SchemaError("unsupported schema_version");

    InputDocument doc;
    for (auto& [name, value] : j["varieties"].items())
        doc.varieties.emplace(name, parse_variety(value, "varieties." + name));

    if (j.count("pairs"))
        for (auto& [name, value] : j["pairs"].items()) {
            std::string where = "pairs." + name;
            expect_keys(value, where, {"x", "z", "glue"}, {"x", "z", "glue"});
            InputDocument::Pair pair;
            pair.x = value["x"].get<std::string>();
            pair.z = value["z"].get<std::string>();
            const hr::HyperresolutionInput& hz = doc.variety(pair.z);
            expect_keys(value["glue"], where + ".glue", {"base", "pieces"},
                        {"base", "pieces"});
            const hr::HyperresolutionInput& hx = doc.variety(pair.x);
            pair.glue.base =
                parse_vertex_map(value["glue"]["base"], hz.base.vertex_count(),
                                 hx.base.vertex_count(), where + ".glue.base");
            for (auto& [key, vm] : value["glue"]["pieces"].items()) {
                cx::SubsetMask mask = parse_mask(key, hz.n, where + ".glue.pieces");
                pair.glue.pieces.emplace(
                    mask, parse_vertex_map(vm, hz.piece(mask).vertex_count(),
                                           hx.piece(mask).vertex_count(),
                                           where + ".glue.pieces[" + key + "]"));
            }
            doc.pairs.emplace(name, std::move(pair));
        }

    if (j.count("products"))
        for (auto& [name, value] : j["products"].items()) {
            std::string where = "products." + name;
            expect_keys(value, where, {"x", "y", "xy"}, {"x", "y", "xy"});
            InputDocument::Product prod;
            prod.x = value["x"].get<std::string>();
            prod.y = value["y"].get<std::string>();
            prod.xy = value["xy"].get<std::string>();
            doc.variety(prod.x);
            doc.variety(prod.y);
            doc.variety(prod.xy);
            doc.products.emplace(name, std::move(prod));
        }

    return doc;
}

InputDocument load_input(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw SchemaError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError("bad JSON in " + path + ": " + e.what());
    }
    return parse_input(j);
}

// ------------------------------------------------------------------- reports

namespace {

json pages_json(const hr::WeightResult& r)
{
    json out;
    out["stable"] = r.pages.stable;
    json tables = json::object();
    // triangle extents, widened when an entry falls outside
    int p_min = 0, q_min = 0, q_max = r.n;
    std::map<int, int> p_max_row;
    auto widen = [&](const std::map<ss::Bidegree, int>& tab) {
        for (auto& [pq, d] : tab) {
            (void)d;
            p_min = std::min(p_min, pq.first);
            q_min = std::min(q_min, pq.second);
            q_max = std::max(q_max, pq.second);
            p_max_row[pq.second] = std::max(p_max_row[pq.second], pq.first);
        }
    };
    for (auto& tab : r.pages.dims)
        widen(tab);
    widen(r.pages.limit);
    for (int r_idx = 2; r_idx <= std::max(2, r.pages.stable); ++r_idx) {
        json rows = json::array();
        for (int q = q_max; q >= q_min; --q) {
            json row;
            row["q"] = q;
            json dims = json::array();
            int p_hi = std::max(r.n - q, p_max_row.count(q) ? p_max_row[q] : 0);
            for (int p = p_min; p <= p_hi; ++p)
                dims.push_back(r.pages.dim(r_idx, p, q));
            row["dims"] = dims;
            rows.push_back(row);
        }
        tables[std::to_string(r_idx)] = rows;
    }
    out["tables"] = tables;
    return out;
}

json filtration_json(const hr::WeightResult& r)
{
    json rows = json::array();
    for (const auto& row : r.table.rows) {
        if (row.h_dim == 0 && row.q > r.n)
            continue;
        json jr;
        jr["k"] = row.q;
        jr["h"] = row.h_dim;
        json graded = json::object();
        for (auto& [p, d] : row.graded)
            graded[std::to_string(p)] = d;
        jr["graded"] = graded;
        json flag = json::object();
        for (auto& [p, d] : row.flag)
            if (d > 0)
                flag[std::to_string(p)] = d;
        jr["flag"] = flag;
        rows.push_back(jr);
    }
    return rows;
}

json classes_json(const hr::WeightResult& r)
{
    json out = json::array();
    const std::vector<hr::NamedClass>& classes =
        r.base ? r.base->classes : r.registry;
    for (const hr::NamedClass& c : classes) {
        json jc;
        jc["name"] = c.name;
        jc["degree"] = c.degree;
        jc["weight"] = c.weight;
        // the limit-page cell carrying the class
        jc["cell"] = json::array({c.degree + c.weight, -c.weight});
        out.push_back(jc);
    }
    return out;
}

json duality_json(const inv::DualityReport& rep)
{
    json out;
    out["n"] = rep.n;
    out["obstruction_ok"] = rep.obstruction_ok;
    out["impure_killed"] = rep.impure_killed;
    out["duality_holds"] = rep.duality_holds;
    out["adjunction_ok"] = rep.adjunction_ok;
    out["witnesses"] = rep.witnesses;
    json records = json::array();
    for (const inv::DualityRecord& rec : rep.records) {
        json jr;
        jr["class"] = rec.name;
        jr["degree"] = rec.degree;
        jr["weight"] = rec.weight;
        jr["pure"] = rec.pure;
        jr["image"] = rec.image;
        jr["in_kernel"] = rec.in_kernel;
        jr["bound"] = rec.bound;
        jr["contained"] = rec.contained;
        records.push_back(jr);
    }
    out["records"] = records;
    return out;
}

json cup_json(const inv::CupFiltrationReport& rep)
{
    json out;
    out["pass"] = rep.pass;
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json jr;
        jr["phi"] = row.phi;
        jr["psi"] = row.psi;
        jr["weights"] = json::array({row.p, row.s});
        jr["zero"] = row.zero;
        if (!row.zero)
            jr["product_weight"] = row.product_weight;
        jr["ok"] = row.ok;
        rows.push_back(jr);
    }
    out["rows"] = rows;
    return out;
}

}  // namespace

json validation_report_json(const std::string& name, const hr::ValidationReport& rep)
{
    json out;
    out["variety"] = name;
    out["ok"] = rep.ok();
    json checks = json::array();
    for (const hr::CheckResult& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty())
            jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    out["checks"] = checks;
    return out;
}

json variety_report(const std::string& name, const hr::WeightResult& r,
                    const ComputeFlags& flags)
{
    json out;
    out["variety"] = name;
    out["compact"] = r.compact;
    out["n"] = r.n;
    json hdims = json::array();
    const cx::GradedComplex& k = r.ss.input().complex();
    int q_top = r.n;
    for (int q = 0; q <= k.k_hi(); ++q)
        if (r.ss.cohomology_dim(q) > 0)
            q_top = std::max(q_top, q);
    for (int q = 0; q <= q_top; ++q)
        hdims.push_back(r.ss.cohomology_dim(q));
    out["h"] = hdims;
    if (flags.pages)
        out["pages"] = pages_json(r);
    if (flags.filtration) {
        out["filtration"] = filtration_json(r);
        out["classes"] = classes_json(r);
    }
    if (flags.betti) {
        inv::VirtualBetti vb = inv::virtual_betti(r);
        out["betti"] = {{"numbers", vb.beta}, {"polynomial", vb.polynomial}};
    }
    if (flags.purity) {
        inv::PurityReport pr = inv::purity_check(r);
        json jp;
        jp["pure"] = pr.pure;
        if (pr.has_witness)
            jp["first_impure"] = json::array({pr.k, pr.p});
        out["purity"] = jp;
    }
    if (flags.duality && r.compact && r.base)
        out["duality"] = duality_json(inv::duality_map(r));
    if (flags.cup_check && r.compact && r.base)
        out["cup_check"] = cup_json(inv::cup_filtration_check(r));
    return out;
}

json pair_report(const std::string& name, const hr::WeightResult& x,
                 const hr::WeightResult& z, const hr::WeightResult& u)
{
    inv::AdditivityReport rep = inv::additivity_check(x, z, u);
    json out;
    out["pair"] = name;
    out["pass"] = rep.pass;
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back(json{{"q", row.q},
                            {"x", row.beta_x},
                            {"z", row.beta_z},
                            {"u", row.beta_u},
                            {"delta", row.delta}});
    out["rows"] = rows;
    out["betti_x"] = inv::virtual_betti(x).polynomial;
    out["betti_z"] = inv::virtual_betti(z).polynomial;
    out["betti_u"] = inv::virtual_betti(u).polynomial;
    return out;
}

json product_report(const std::string& name, const hr::WeightResult& x,
                    const hr::WeightResult& y, const hr::WeightResult& xy,
                    const inv::KunnethReport& kn)
{
    json out;
    out["product"] = name;
    inv::VirtualBetti bx = inv::virtual_betti(x);
    inv::VirtualBetti by = inv::virtual_betti(y);
    inv::VirtualBetti bxy = inv::virtual_betti(xy);
    bool betti_ok = inv::poly_multiply(bx.beta, by.beta) == bxy.beta;
    out["betti_x"] = bx.polynomial;
    out["betti_y"] = by.polynomial;
    out["betti_xy"] = bxy.polynomial;
    out["betti_multiplicative"] = betti_ok;
    out["pages_split"] = kn.split_ok;
    out["pages_match"] = kn.pages_ok;
    out["mismatches"] = kn.mismatches;
    out["pass"] = betti_ok && kn.split_ok && kn.pages_ok;
    return out;
}

// ------------------------------------------------------------- text renderer

namespace {

void render_pages(std::ostringstream& os, const json& pages)
{
    os << "weight pages (stable at r=" << pages["stable"].get<int>() << ")\n";
    for (auto& [r_name, rows] : pages["tables"].items()) {
        os << "E~[r=" << r_name << "]\n";
        for (const json& row : rows) {
            os << "  q=" << row["q"].get<int>() << " |";
            for (const json& d : row["dims"])
                os << " " << d.get<int>();
            os << "\n";
        }
    }
}

}  // namespace

std::string render_text(const json& report)
{
    std::ostringstream os;
    if (report.count("variety")) {
        os << "variety: " << report["variety"].get<std::string>() << "\n";
        if (report.count("checks")) {
            for (const json& c : report["checks"]) {
                os << "  " << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  "
                   << c["name"].get<std::string>();
                if (c.count("detail"))
                    os << "  (" << c["detail"].get<std::string>() << ")";
                os << "\n";
            }
            os << (report["ok"].get<bool>() ? "ok" : "invalid") << "\n";
            return os.str();
        }
        os << "dim: " << report["n"].get<int>() << "  compact: "
           << (report["compact"].get<bool>() ? "yes" : "no") << "\n";
        os << "cohomology dims:";
        for (const json& d : report["h"])
            os << " " << d.get<int>();
        os << "\n";
        if (report.count("pages"))
            render_pages(os, report["pages"]);
        if (report.count("filtration")) {
            os << "weight filtration (graded dims by weight index)\n";
            for (const json& row : report["filtration"]) {
                os << "  k=" << row["k"].get<int>() << " h=" << row["h"].get<int>() << " ";
                for (auto& [p, d] : row["graded"].items())
                    os << " gr[" << p << "]=" << d.get<int>();
                os << "\n";
            }
        }
        if (report.count("classes")) {
            os << "classes\n";
            for (const json& c : report["classes"])
                os << "  " << c["name"].get<std::string>() << ": degree "
                   << c["degree"].get<int>() << ", weight " << c["weight"].get<int>()
                   << ", cell (" << c["cell"][0].get<int>() << ","
                   << c["cell"][1].get<int>() << ")\n";
        }
        if (report.count("betti"))
            os << "virtual Poincare polynomial: "
               << report["betti"]["polynomial"].get<std::string>() << "\n";
        if (report.count("purity")) {
            os << "purity: " << (report["purity"]["pure"].get<bool>() ? "pure" : "impure");
            if (report["purity"].count("first_impure"))
                os << " (first impure k=" << report["purity"]["first_impure"][0].get<int>()
                   << ", p=" << report["purity"]["first_impure"][1].get<int>() << ")";
            os << "\n";
        }
        if (report.count("duality")) {
            const json& d = report["duality"];
            os << "duality: cap with the fundamental class "
               << (d["duality_holds"].get<bool>() ? "is bijective" : "fails") << "\n";
            os << "  obstruction containment: "
               << (d["obstruction_ok"].get<bool>() ? "pass" : "FAIL") << "\n";
            os << "  impure classes killed: "
               << (d["impure_killed"].get<bool>() ? "pass" : "FAIL") << "\n";
            os << "  adjunction: " << (d["adjunction_ok"].get<bool>() ? "pass" : "FAIL")
               << "\n";
            for (const json& rec : d["records"])
                os << "  " << rec["class"].get<std::string>() << " (degree "
                   << rec["degree"].get<int>() << ", weight " << rec["weight"].get<int>()
                   << (rec["pure"].get<bool>() ? ", pure" : ", impure")
                   << ") -> " << rec["image"].get<std::string>() << "\n";
            for (const json& w : d["witnesses"])
                os << "  witness in the kernel: " << w.get<std::string>() << "\n";
        }
        if (report.count("cup_check"))
            os << "cup filtration check: "
               << (report["cup_check"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
        return os.str();
    }
    if (report.count("pair")) {
        os << "pair: " << report["pair"].get<std::string>() << "\n";
        os << "additivity: " << (report["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
        for (const json& row : report["rows"])
            os << "  q=" << row["q"].get<int>() << "  " << row["x"].get<int>() << " = "
               << row["z"].get<int>() << " + " << row["u"].get<int>()
               << (row["delta"].get<int>() == 0 ? "" : "  MISMATCH") << "\n";
        os << "beta(X) = " << report["betti_x"].get<std::string>() << "\n";
        os << "beta(Z) = " << report["betti_z"].get<std::string>() << "\n";
        os << "beta(U) = " << report["betti_u"].get<std::string>() << "\n";
        return os.str();
    }
    if (report.count("product")) {
        os << "product: " << report["product"].get<std::string>() << "\n";
        os << "pages split: " << (report["pages_split"].get<bool>() ? "pass" : "FAIL")
           << "\n";
        os << "pages match product: "
           << (report["pages_match"].get<bool>() ? "pass" : "FAIL") << "\n";
        os << "beta multiplicative: "
           << (report["betti_multiplicative"].get<bool>() ? "pass" : "FAIL") << "\n";
        os << "beta(X) = " << report["betti_x"].get<std::string>() << "\n";
        os << "beta(Y) = " << report["betti_y"].get<std::string>() << "\n";
        os << "beta(XY) = " << report["betti_xy"].get<std::string>() << "\n";
        return os.str();
    }
    if (report.is_array()) {
        for (const json& item : report)
            os << render_text(item);
        return os.str();
    }
    os << report.dump(2) << "\n";
    return os.str();
}

}  // namespace weightss::io
