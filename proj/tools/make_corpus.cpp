// Regenerates the bundled input corpus (data/corpus.json).

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "weightss/corpus.hpp"

using nlohmann::json;
using namespace weightss;

namespace {

json model_json(const simp::SimplicialModel& m)
{
    json out;
    out["vertices"] = m.vertex_count();
    json simplices = json::array();
    for (const auto& s : m.simplices(m.dim()))
        simplices.push_back(s);
    out["simplices"] = simplices;
    return out;
}

std::string mask_key(cx::SubsetMask mask)
{
    std::string key;
    for (int i = 0; i < 20; ++i)
        if (mask & (cx::SubsetMask{1} << i)) {
            if (!key.empty())
                key += ",";
            key += std::to_string(i + 1);
        }
    return key;
}

json map_json(const simp::SimplicialMap& f)
{
    json out = json::object();
    for (std::size_t v = 0; v < f.vertex_map.size(); ++v)
        out[std::to_string(v)] = f.vertex_map[v];
    return out;
}

json variety_json(const hr::HyperresolutionInput& h)
{
    json out;
    out["dim"] = h.dim_x;
    out["compact"] = h.compact;
    out["cube"] = h.n;
    out["base"] = model_json(h.base);
    json pieces = json::object();
    for (auto& [mask, model] : h.pieces)
        pieces[mask_key(mask)] = model_json(model);
    out["pieces"] = pieces;
    if (!h.face_maps.empty()) {
        json maps = json::object();
        for (auto& [key, f] : h.face_maps)
            maps[mask_key(key.first) + "->" + mask_key(key.second)] = map_json(f);
        out["face_maps"] = maps;
    }
    json augs = json::object();
    for (auto& [mask, f] : h.augmentations)
        augs[mask_key(mask)] = map_json(f);
    out["augmentations"] = augs;
    return out;
}

json glue_json(const hr::GlueMap& g)
{
    json out;
    out["base"] = map_json(g.base);
    json pieces = json::object();
    for (auto& [mask, f] : g.pieces)
        pieces[mask_key(mask)] = map_json(f);
    out["pieces"] = pieces;
    return out;
}

}  // namespace

int main(int argc, char** argv)
{
    std::string path = argc > 1 ? argv[1] : "data/corpus.json";

    json doc;
    doc["schema_version"] = "1";

    json varieties = json::object();
    varieties["point"] = variety_json(corpus::trivial_input(corpus::point(), 0));
    varieties["circle"] = variety_json(corpus::trivial_input(corpus::circle(), 1));
    varieties["sphere"] = variety_json(corpus::trivial_input(corpus::sphere(), 2));
    varieties["torus"] = variety_json(corpus::trivial_input(corpus::torus7(), 2));
    varieties["projective_plane"] =
        variety_json(corpus::trivial_input(corpus::projective_plane(), 2));
    varieties["pinched_torus"] = variety_json(corpus::pinched_torus_input());
    varieties["pinched_torus_x_circle"] =
        variety_json(corpus::product_input(corpus::pinched_torus_input(), corpus::circle()));
    doc["varieties"] = varieties;

    json pairs = json::object();
    {
        json pair;
        pair["x"] = "circle";
        pair["z"] = "point";
        pair["glue"] = glue_json(corpus::point_glue(corpus::trivial_input(corpus::circle(), 1)));
        pairs["line"] = pair;
    }
    {
        json pair;
        pair["x"] = "sphere";
        pair["z"] = "point";
        pair["glue"] = glue_json(corpus::point_glue(corpus::trivial_input(corpus::sphere(), 2)));
        pairs["plane"] = pair;
    }
    {
        json pair;
        pair["x"] = "circle";
        pair["z"] = "circle";
        pair["glue"] = glue_json(corpus::identity_glue(corpus::trivial_input(corpus::circle(), 1)));
        pairs["degenerate"] = pair;
    }
    doc["pairs"] = pairs;

    json products = json::object();
    products["circle_x_circle"] = {{"x", "circle"}, {"y", "circle"}, {"xy", "torus"}};
    products["pinched_torus_x_circle"] = {
        {"x", "pinched_torus"}, {"y", "circle"}, {"xy", "pinched_torus_x_circle"}};
    doc["products"] = products;

    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 1;
    }
    out << doc.dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
    return 0;
}
