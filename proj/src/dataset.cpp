#include "m3c/dataset.hpp"

#include "m3c/delaunay.hpp"
#include "m3c/error.hpp"

#include "json.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace m3c {

using nlohmann::json;

namespace {

std::string where(std::size_t index, const json& g)
{
    if (g.is_object() && g.contains("id") && g["id"].is_string())
        return "graph '" + g["id"].get<std::string>() + "'";
    return "graph #" + std::to_string(index);
}

template <typename T>
T field(const json& obj, const char* name, const std::string& ctx)
{
    if (!obj.contains(name))
        throw ParseError(ctx + ": missing \"" + name + "\" field");
    try {
        return obj.at(name).get<T>();
    } catch (const json::exception&) {
        throw ParseError(ctx + ": field \"" + name + "\" has the wrong type");
    }
}

json synth_to_json(const SynthConfig& c)
{
    return {{"classes", c.n_classes},
            {"graphs_per_class", c.graphs_per_class},
            {"inliers", c.n_inliers},
            {"outliers", c.n_outliers},
            {"deform", c.deform_sigma},
            {"seed", c.seed}};
}

SynthConfig synth_from_json(const json& j)
{
    const std::string ctx = "synth block";
    SynthConfig c;
    c.n_classes = field<std::size_t>(j, "classes", ctx);
    c.graphs_per_class = field<std::vector<std::size_t>>(j, "graphs_per_class", ctx);
    c.n_inliers = field<std::size_t>(j, "inliers", ctx);
    c.n_outliers = field<std::size_t>(j, "outliers", ctx);
    c.deform_sigma = field<double>(j, "deform", ctx);
    c.seed = field<std::uint64_t>(j, "seed", ctx);
    return c;
}

} // namespace

Dataset Dataset::from_synth(const SynthConfig& cfg)
{
    auto inst = synth_generate(cfg);
    return {std::move(inst.graphs), std::move(inst.landmarks), cfg};
}

std::optional<ClusterDivision> Dataset::gt_division() const
{
    std::map<std::string, std::size_t> ids;
    std::vector<std::size_t> labels;
    for (const auto& g : graphs) {
        if (!g.class_label())
            return std::nullopt;
        const auto [it, fresh] = ids.emplace(*g.class_label(), ids.size());
        labels.push_back(it->second);
    }
    if (labels.empty())
        return std::nullopt;
    return ClusterDivision(std::move(labels));
}

std::optional<MatchingSet> Dataset::gt_matchings() const
{
    const auto division = gt_division();
    if (!division || landmarks.size() != graphs.size())
        return std::nullopt;
    for (std::size_t g = 0; g < graphs.size(); ++g)
        if (landmarks[g].size() != graphs[g].size())
            return std::nullopt;
    return landmark_matchings(graphs, landmarks, *division);
}

Dataset parse_dataset(const std::string& text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("dataset is not valid JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ParseError("dataset: top level must be an object");
    const int version = field<int>(root, "version", "dataset");
    if (version != kDatasetVersion)
        throw VersionError("dataset: unsupported version " + std::to_string(version));
    if (root.contains("format") && root["format"] != "m3c-dataset")
        throw ParseError("dataset: unexpected format tag");

    Dataset d;
    if (root.contains("synth"))
        d.synth = synth_from_json(root["synth"]);

    const auto& graphs = root.contains("graphs") ? root["graphs"] : json();
    if (!graphs.is_array())
        throw ParseError("dataset: missing \"graphs\" array");
    for (std::size_t index = 0; index < graphs.size(); ++index) {
        const json& g = graphs[index];
        const std::string ctx = where(index, g);
        if (!g.is_object())
            throw ParseError(ctx + ": entry must be an object");

        const auto id = g.contains("id") ? field<std::string>(g, "id", ctx) : std::to_string(index);
        const auto coords = field<std::vector<std::vector<double>>>(g, "points", ctx);
        std::vector<Point> points;
        for (const auto& c : coords) {
            if (c.size() != 2)
                throw ParseError(ctx + ": every point needs exactly two coordinates");
            points.push_back({c[0], c[1]});
        }
        if (points.empty())
            throw ParseError(ctx + ": \"points\" is empty");

        std::vector<Edge> edges;
        try {
            if (g.contains("edges")) {
                for (const auto& e : field<std::vector<std::vector<std::size_t>>>(g, "edges", ctx)) {
                    if (e.size() != 2)
                        throw ParseError(ctx + ": every edge needs exactly two endpoints");
                    edges.emplace_back(e[0], e[1]);
                }
            } else {
                edges = delaunay(points);
            }
        } catch (const ContractViolation& e) {
            throw ParseError(ctx + ": " + e.what());
        }

        std::optional<std::string> cls;
        if (g.contains("class"))
            cls = field<std::string>(g, "class", ctx);
        std::optional<std::size_t> inliers;
        if (g.contains("n_inliers"))
            inliers = field<std::size_t>(g, "n_inliers", ctx);

        Landmarks marks;
        if (g.contains("landmarks")) {
            const auto& arr = g["landmarks"];
            if (!arr.is_array() || arr.size() != points.size())
                throw ParseError(ctx + ": \"landmarks\" must list one entry per point");
            for (const auto& m : arr) {
                if (m.is_null())
                    marks.emplace_back(std::nullopt);
                else if (m.is_number_unsigned())
                    marks.emplace_back(m.get<std::size_t>());
                else
                    throw ParseError(ctx + ": landmark entries must be non-negative integers or null");
            }
        } else if (inliers) {
            for (std::size_t v = 0; v < points.size(); ++v)
                marks.emplace_back(v < *inliers ? std::optional<std::size_t>(v) : std::nullopt);
        }

        try {
            d.graphs.emplace_back(id, std::move(points), std::move(edges), cls, inliers);
        } catch (const ContractViolation& e) {
            throw ParseError(ctx + ": " + e.what());
        }
        d.landmarks.push_back(std::move(marks));
    }
    return d;
}

Dataset load_dataset(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open dataset '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str());
}

std::string serialize_dataset(const Dataset& d)
{
    json root = {{"format", "m3c-dataset"}, {"version", kDatasetVersion}};
    if (d.synth)
        root["synth"] = synth_to_json(*d.synth);
    json graphs = json::array();
    for (std::size_t i = 0; i < d.graphs.size(); ++i) {
        const auto& g = d.graphs[i];
        json jg = {{"id", g.id()}};
        if (g.class_label())
            jg["class"] = *g.class_label();
        if (g.inlier_count())
            jg["n_inliers"] = *g.inlier_count();
        if (i < d.landmarks.size() && !d.landmarks[i].empty()) {
            json marks = json::array();
            for (const auto& m : d.landmarks[i])
                marks.push_back(m ? json(*m) : json(nullptr));
            jg["landmarks"] = std::move(marks);
        }
        json pts = json::array();
        for (const auto& p : g.points())
            pts.push_back({p.x, p.y});
        jg["points"] = std::move(pts);
        json edges = json::array();
        for (const auto& [a, b] : g.edges())
            edges.push_back({a, b});
        jg["edges"] = std::move(edges);
        graphs.push_back(std::move(jg));
    }
    root["graphs"] = std::move(graphs);
    return root.dump(1) + "\n";
}

void save_dataset(const std::filesystem::path& path, const Dataset& d)
{
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot write dataset '" + path.string() + "'");
    out << serialize_dataset(d);
}

} // namespace m3c
