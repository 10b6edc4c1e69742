// Copyright 2026 The bks Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>

#include "bks/automorphism.h"
#include "bks/coloring.h"
#include "bks/io.h"
#include "bks/metric.h"
#include "bks/pauli.h"
#include "bks/proofs.h"
#include "bks/search.h"
#include "bks/symmetry.h"

namespace bks::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct RunConfig {
    std::string command;
    std::string command_line;
    int qubits = 2;
    bool generated = false;
    std::uint64_t seed = 0;
    std::uint64_t budget = SearchParams{}.budget;
    int attempts = SearchParams{}.attempts;
    Format format = Format::json;
    std::string proof_path;
    std::string paper_name;
    std::string type_filter;
    std::string config_label;
    std::string crossing_path;
    int overlap = -1;
};

/// Negative answers: colorable, not found.
struct Negative {};

class Reporter {
   public:
    Reporter(const RunConfig &config, std::ostream &out) : config_(config), out_(out) {
    }

    json meta() const {
        return json{{"tool", "bks"},
                    {"version", std::string(kVersion)},
                    {"command", config_.command_line},
                    {"seed", config_.seed}};
    }

    void emit_json(json body) const {
        body["meta"] = meta();
        out_ << body.dump(2) << "\n";
    }

    /// Header for the line-oriented formats.
    std::ostream &header() const {
        const char *prefix = config_.format == Format::csv ? "# " : "";
        out_ << prefix << "bks " << kVersion << "\n";
        out_ << prefix << "command: " << config_.command_line << "\n";
        out_ << prefix << "seed: " << config_.seed << "\n";
        return out_;
    }

    std::ostream &out() const {
        return out_;
    }

   private:
    const RunConfig &config_;
    std::ostream &out_;
};

std::string join(const std::vector<int> &values, const char *sep) {
    std::ostringstream s;
    for (size_t k = 0; k < values.size(); k++) {
        s << (k ? sep : "") << values[k];
    }
    return s.str();
}

RayCatalog load_catalog(const RunConfig &config) {
    if (config.qubits < 2 || config.qubits > 4) {
        throw InputError("--qubits must be 2, 3 or 4");
    }
    if (config.generated) {
        if (config.qubits == 4) {
            throw InputError("generated catalogs exist for 2 and 3 qubits only");
        }
        return catalog_generated(config.qubits);
    }
    return catalog_paper(config.qubits);
}

/// Named reference proofs with their catalogs.
LoadedProof named_proof(const std::string &name) {
    if (name == "18-9") {
        RayCatalog catalog = catalog_paper(2);
        ProofSet proof = magic_square9_proof(IncidenceStructure::for_catalog(catalog));
        return LoadedProof{std::move(catalog), std::move(proof)};
    }
    if (name == "eleven") {
        return LoadedProof{catalog_paper(3), reference_proof(name)};
    }
    if (name == "80-21" || name == "80-22" || name == "80-23") {
        return LoadedProof{catalog_paper(4), reference_proof(name)};
    }
    throw InputError("unknown proof name '" + name + "' (expected 18-9, eleven, 80-21, 80-22 or 80-23)");
}

LoadedProof load_proof(const RunConfig &config) {
    if (!config.paper_name.empty() && !config.proof_path.empty()) {
        throw InputError("give either a proof file or --paper-proof, not both");
    }
    if (!config.paper_name.empty()) {
        return named_proof(config.paper_name);
    }
    if (config.proof_path.empty()) {
        throw InputError("a proof file or --paper-proof is required");
    }
    LoadedProof loaded = proof_from_json(read_json_file(config.proof_path));
    if (loaded.catalog.num_qubits() < 4) {
        // Attach basis numbers where the catalog has a numbering.
        auto inc = IncidenceStructure::for_catalog(loaded.catalog);
        std::vector<int> ids;
        for (const Basis &b : loaded.proof.bases) {
            ids.push_back(*inc.find_basis(b));
        }
        loaded.proof = make_proof(inc, ids);
    }
    return loaded;
}

void require_format(const RunConfig &config, std::initializer_list<Format> allowed) {
    if (std::find(allowed.begin(), allowed.end(), config.format) == allowed.end()) {
        throw InputError("format not supported by '" + config.command + "'");
    }
}

int cmd_rays(const RunConfig &config, const Reporter &rep) {
    RayCatalog catalog = load_catalog(config);
    if (config.format == Format::json) {
        json body = catalog_to_json(catalog);
        body["catalog"] = catalog.name();
        rep.emit_json(body);
        return 0;
    }
    std::ostream &out = rep.header();
    if (config.format == Format::csv) {
        out << "id";
        for (int k = 1; k <= catalog.dimension(); k++) {
            out << ",c" << k;
        }
        out << "\n";
    }
    for (const Ray &r : catalog.rays()) {
        out << r.id << (config.format == Format::csv ? "," : ": (");
        for (size_t k = 0; k < r.coords.size(); k++) {
            out << (k ? "," : "") << r.coords[k];
        }
        out << (config.format == Format::csv ? "\n" : ")\n");
    }
    return 0;
}

int cmd_bases(const RunConfig &config, const Reporter &rep) {
    RayCatalog catalog = load_catalog(config);
    std::vector<Basis> bases = numbered_bases(catalog);
    if (config.format == Format::json) {
        rep.emit_json(bases_to_json(catalog, bases));
        return 0;
    }
    std::ostream &out = rep.header();
    if (config.format == Format::csv) {
        out << "id";
        for (int k = 1; k <= catalog.dimension(); k++) {
            out << ",r" << k;
        }
        out << "\n";
    }
    for (size_t k = 0; k < bases.size(); k++) {
        if (config.format == Format::csv) {
            out << k + 1 << "," << join(bases[k].ray_ids, ",") << "\n";
        } else {
            out << k + 1 << ": {" << join(bases[k].ray_ids, ", ") << "}\n";
        }
    }
    return 0;
}

int cmd_distances(const RunConfig &config, const Reporter &rep) {
    std::optional<LoadedProof> loaded;
    if (!config.proof_path.empty() || !config.paper_name.empty()) {
        loaded = load_proof(config);
    }
    RayCatalog catalog = loaded ? loaded->catalog : load_catalog(config);
    std::vector<Basis> all = numbered_bases(catalog);
    DistanceTable table(all, catalog);
    const DistanceSpectrum &spec = table.spectrum();
    Histogram counts;
    if (loaded) {
        counts = histogram(loaded->proof.bases, spec, catalog);
    } else {
        std::vector<int> positions(all.size());
        for (size_t k = 0; k < all.size(); k++) {
            positions[k] = static_cast<int>(k);
        }
        counts = table.histogram(positions);
    }
    if (config.format == Format::json) {
        json classes = json::array();
        for (size_t k = 0; k < spec.size(); k++) {
            classes.push_back(json{{"label", k + 1},
                                   {"dist_sq", spec.classes[k].str()},
                                   {"dist", decimal_sqrt(spec.classes[k], 6)},
                                   {"count", counts[k]}});
        }
        rep.emit_json(json{{"catalog", catalog.name()}, {"classes", classes}});
        return 0;
    }
    std::ostream &out = rep.header();
    if (config.format == Format::csv) {
        out << "class_label,dist_sq,dist,count\n";
    }
    for (size_t k = 0; k < spec.size(); k++) {
        if (config.format == Format::csv) {
            out << "a" << k + 1 << "," << spec.classes[k].str() << "," << decimal_sqrt(spec.classes[k], 6) << ","
                << counts[k] << "\n";
        } else {
            out << "a" << k + 1 << "  D^2 = " << spec.classes[k].str() << "  D = " << decimal_sqrt(spec.classes[k], 6)
                << "  pairs = " << counts[k] << "\n";
        }
    }
    return 0;
}

bool type_matches(const ProofSet &p, const std::string &filter) {
    if (filter.empty()) {
        return true;
    }
    return p.type() == filter || std::to_string(p.v) + "-" + std::to_string(p.l) == filter;
}

int cmd_parity_proofs(const RunConfig &config, const Reporter &rep) {
    RayCatalog catalog = load_catalog(config);
    IncidenceStructure inc = IncidenceStructure::for_catalog(catalog);
    if (catalog.num_qubits() == 4) {
        require_format(config, {Format::json, Format::text});
        bool odd = odd_kernel_exists(inc);
        auto dim = inc.bases().size() - gf2_rank(inc.matrix());
        if (config.format == Format::json) {
            rep.emit_json(json{{"catalog", catalog.name()}, {"kernel_dim", dim}, {"odd_kernel_exists", odd}});
        } else {
            rep.header() << "kernel dimension " << dim << " (too large to enumerate)\n"
                         << "odd-weight kernel vectors exist: " << (odd ? "yes" : "no") << "\n";
        }
        return 0;
    }
    DistanceTable table(inc.bases(), catalog);
    std::vector<ProofSet> proofs = enumerate_parity_proofs(inc);
    classify(proofs, table, catalog.dimension());
    std::map<std::string, long> counts;
    std::vector<const ProofSet *> kept;
    for (const ProofSet &p : proofs) {
        if (type_matches(p, config.type_filter)) {
            counts[p.type()]++;
            kept.push_back(&p);
        }
    }
    if (!config.type_filter.empty() && kept.empty()) {
        throw InputError("no parity proofs of type '" + config.type_filter + "'");
    }
    if (config.format == Format::json) {
        json list = json::array();
        for (const ProofSet *p : kept) {
            list.push_back(json{{"type", p->type()},
                                {"basis_ids", p->basis_ids},
                                {"v", p->v},
                                {"l", p->l},
                                {"histogram", proof_histogram(*p, table)}});
        }
        rep.emit_json(json{{"catalog", catalog.name()}, {"counts", counts}, {"total", kept.size()}, {"proofs", list}});
        return 0;
    }
    std::ostream &out = rep.header();
    if (config.format == Format::csv) {
        out << "type,v,l,basis_ids";
        for (size_t k = 1; k <= table.spectrum().size(); k++) {
            out << ",a" << k;
        }
        out << "\n";
        for (const ProofSet *p : kept) {
            out << p->type() << "," << p->v << "," << p->l << "," << join(p->basis_ids, " ");
            for (long c : proof_histogram(*p, table)) {
                out << "," << c;
            }
            out << "\n";
        }
        return 0;
    }
    for (const auto &[type, count] : counts) {
        out << type << ": " << count << "\n";
    }
    out << "total: " << kept.size() << "\n";
    return 0;
}

int cmd_verify(const RunConfig &config, const Reporter &rep) {
    require_format(config, {Format::json, Format::text});
    LoadedProof loaded = load_proof(config);
    auto coloring = is_colorable(loaded.catalog, loaded.proof.bases);
    json body{{"catalog", loaded.catalog.name()},
              {"v", loaded.proof.v},
              {"l", loaded.proof.l},
              {"parity", loaded.proof.flags.parity},
              {"result", coloring ? "colorable" : "non-colorable"}};
    if (coloring) {
        body["true_rays"] = coloring->true_rays();
    }
    if (config.format == Format::json) {
        rep.emit_json(body);
    } else {
        std::ostream &out = rep.header();
        out << loaded.proof.v << "-" << loaded.proof.l << " on " << loaded.catalog.name() << ": "
            << body["result"].get<std::string>() << "\n";
        if (coloring) {
            out << "true rays: " << join(coloring->true_rays(), " ") << "\n";
        }
    }
    return coloring ? 1 : 0;
}

int cmd_critical(const RunConfig &config, const Reporter &rep) {
    require_format(config, {Format::json, Format::text});
    LoadedProof loaded = load_proof(config);
    if (!verify_bks_proof(loaded.proof, loaded.catalog)) {
        if (config.format == Format::json) {
            rep.emit_json(json{{"catalog", loaded.catalog.name()}, {"result", "colorable"}});
        } else {
            rep.header() << "the set is colorable, so criticality does not apply\n";
        }
        return 1;
    }
    CriticalityReport report = criticality(loaded.proof, loaded.catalog);
    std::vector<int> redundant_bases;
    for (size_t k = 0; k < report.basis_deletion_colorable.size(); k++) {
        if (!report.basis_deletion_colorable[k]) {
            redundant_bases.push_back(static_cast<int>(k) + 1);
        }
    }
    std::vector<int> redundant_rays;
    for (const auto &[id, colorable] : report.ray_deletion_colorable) {
        if (!colorable) {
            redundant_rays.push_back(id);
        }
    }
    if (config.format == Format::json) {
        rep.emit_json(json{{"catalog", loaded.catalog.name()},
                           {"result", "non-colorable"},
                           {"v", loaded.proof.v},
                           {"l", loaded.proof.l},
                           {"basis_critical", report.basis_critical},
                           {"ray_critical", report.ray_critical},
                           {"redundant_basis_positions", redundant_bases},
                           {"redundant_rays", redundant_rays}});
    } else {
        std::ostream &out = rep.header();
        out << "basis-critical: " << (report.basis_critical ? "yes" : "no") << "\n";
        out << "ray-critical: " << (report.ray_critical ? "yes" : "no") << "\n";
        out << "bases whose deletion leaves a proof (1-based positions): " << join(redundant_bases, " ") << "\n";
        out << "rays whose deletion leaves a proof: " << join(redundant_rays, " ") << "\n";
    }
    return 0;
}

int cmd_search4q(const RunConfig &config, const Reporter &rep) {
    require_format(config, {Format::json, Format::text});
    if (config.attempts < 1) {
        throw InputError("--attempts must be positive");
    }
    RayCatalog catalog = catalog_paper(4);
    IncidenceStructure inc = IncidenceStructure::for_catalog(catalog);
    DistanceTable table(inc.bases(), catalog);
    SearchParams params;
    params.budget = config.budget;
    params.attempts = config.attempts;
    SearchResult result;
    try {
        result = search_4q(inc, table, config.seed, params);
    } catch (const SearchFailure &e) {
        if (config.format == Format::json) {
            rep.emit_json(json{{"result", "not found"}, {"reason", e.what()}});
        } else {
            rep.header() << e.what() << "\n";
        }
        return 1;
    }
    if (config.format == Format::json) {
        json selected = proof_to_json(catalog, result.selected);
        selected["histogram"] = proof_histogram(result.selected, table);
        json shrunk = proof_to_json(catalog, result.shrunk);
        shrunk["histogram"] = proof_histogram(result.shrunk, table);
        rep.emit_json(json{{"result", "found"},
                           {"selected", selected},
                           {"partition", result.partition},
                           {"shrunk", shrunk},
                           {"shrink_trace", result.shrink_trace},
                           {"draws", result.draws},
                           {"attempts", result.attempts_used}});
    } else {
        std::ostream &out = rep.header();
        out << "selected: " << result.selected.v << "-" << result.selected.l << " bases "
            << join(result.selected.basis_ids, " ") << "\n";
        out << "partition: " << join(result.partition, " ") << "\n";
        out << "shrunk: " << result.shrunk.v << "-" << result.shrunk.l << " bases "
            << join(result.shrunk.basis_ids, " ") << "\n";
    }
    return 0;
}

int cmd_aut(const RunConfig &config, const Reporter &rep) {
    require_format(config, {Format::json, Format::text});
    Graph graph;
    if (!config.config_label.empty() == !config.crossing_path.empty()) {
        throw InputError("give exactly one of --config and --crossing");
    }
    if (!config.config_label.empty()) {
        try {
            graph = config_incidence_graph(magic_configuration(config.config_label));
        } catch (const std::invalid_argument &e) {
            throw InputError(e.what());
        }
    } else {
        if (config.overlap < 0) {
            throw InputError("--crossing needs --overlap");
        }
        LoadedProof loaded = proof_from_json(read_json_file(config.crossing_path));
        std::vector<std::vector<int>> items;
        for (const Basis &b : loaded.proof.bases) {
            items.push_back(b.ray_ids);
        }
        graph = crossing_graph(items, static_cast<size_t>(config.overlap));
    }
    AutReport report = aut_order(graph);
    if (config.format == Format::json) {
        rep.emit_json(json{{"vertices", graph.size()},
                           {"edges", graph.edge_count()},
                           {"order", report.order.str()},
                           {"orbit_sizes", report.orbit_sizes},
                           {"generators", report.generators}});
    } else {
        rep.header() << "vertices: " << graph.size() << "\nedges: " << graph.edge_count()
                     << "\norder: " << report.order.str() << "\n";
    }
    return 0;
}

struct TableRow {
    std::string type;
    long count = 0;
    Histogram histogram;
};

int cmd_emit_tables(const RunConfig &config, const Reporter &rep) {
    RayCatalog catalog = load_catalog(config);
    IncidenceStructure inc = IncidenceStructure::for_catalog(catalog);
    DistanceTable table(inc.bases(), catalog);
    std::vector<TableRow> rows;
    if (catalog.num_qubits() == 4) {
        for (const char *name : {"80-23", "80-22", "80-21"}) {
            rows.push_back(TableRow{name, 1, histogram(reference_proof(name).bases, table.spectrum(), catalog)});
        }
    } else {
        std::vector<ProofSet> proofs = enumerate_parity_proofs(inc);
        classify(proofs, table, catalog.dimension());
        std::map<std::string, TableRow> by_type;
        for (const ProofSet &p : proofs) {
            TableRow &row = by_type[p.type()];
            Histogram h = proof_histogram(p, table);
            if (row.count > 0 && row.histogram != h) {
                throw ClassificationError("proofs of type " + p.type() + " have different histograms");
            }
            row.type = p.type();
            row.histogram = h;
            row.count++;
        }
        // Largest proofs first.
        for (auto it = by_type.rbegin(); it != by_type.rend(); ++it) {
            rows.push_back(it->second);
        }
    }
    const size_t classes = table.spectrum().size();
    if (config.format == Format::json) {
        json list = json::array();
        for (const TableRow &r : rows) {
            long total = 0;
            for (long c : r.histogram) {
                total += c;
            }
            list.push_back(json{{"type", r.type}, {"count", r.count}, {"histogram", r.histogram}, {"total", total}});
        }
        std::vector<std::string> labels;
        for (const Rational &c : table.spectrum().classes) {
            labels.push_back(c.str());
        }
        rep.emit_json(json{{"catalog", catalog.name()}, {"dist_sq", labels}, {"rows", list}});
        return 0;
    }
    std::ostream &out = rep.header();
    const char *sep = config.format == Format::csv ? "," : "\t";
    out << "type" << sep << "count";
    for (size_t k = 1; k <= classes; k++) {
        out << sep << "a" << k;
    }
    out << sep << "total\n";
    for (const TableRow &r : rows) {
        long total = 0;
        out << r.type << sep << r.count;
        for (long c : r.histogram) {
            out << sep << c;
            total += c;
        }
        out << sep << total << "\n";
    }
    return 0;
}

int cmd_paper_proof(const RunConfig &config, const Reporter &rep) {
    require_format(config, {Format::json});
    LoadedProof loaded = named_proof(config.paper_name);
    loaded.proof.flags.bks_verified = verify_bks_proof(loaded.proof, loaded.catalog);
    rep.emit_json(proof_to_json(loaded.catalog, loaded.proof));
    return 0;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig config;
    config.command_line = "bks";
    for (const std::string &a : args) {
        config.command_line += " " + a;
    }
    CLI::App app{"Kochen-Specker proofs from Pauli-operator rays", "bks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));
    std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

    auto common = [&](CLI::App *sub, bool qubits) {
        sub->add_option("--format", config.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--seed", config.seed, "Seed recorded in the report");
        if (qubits) {
            sub->add_option("--qubits", config.qubits, "Number of qubits")->check(CLI::Range(2, 4));
        }
    };
    auto *rays = app.add_subcommand("rays", "Ray catalog");
    common(rays, true);
    rays->add_flag("--generated", config.generated, "Rays from operator eigenbases instead of the reference list");
    auto *bases = app.add_subcommand("bases", "Maximal orthogonal bases");
    common(bases, true);
    bases->add_flag("--generated", config.generated, "Use the generated catalog");
    auto *distances = app.add_subcommand("distances", "Distance classes between bases");
    common(distances, true);
    distances->add_option("--proof", config.proof_path, "Histogram over the bases of a proof file");
    auto *parity = app.add_subcommand("parity-proofs", "Enumerate parity proofs");
    common(parity, true);
    parity->add_option("--type", config.type_filter, "Keep only V-L or V-L subtype");
    auto *verify = app.add_subcommand("verify", "Check non-colorability");
    common(verify, false);
    verify->add_option("proof", config.proof_path, "Proof file");
    verify->add_option("--paper-proof", config.paper_name, "Named reference proof");
    auto *critical = app.add_subcommand("critical", "Basis and ray criticality");
    common(critical, false);
    critical->add_option("proof", config.proof_path, "Proof file");
    critical->add_option("--paper-proof", config.paper_name, "Named reference proof");
    auto *search = app.add_subcommand("search4q", "Randomized 4-qubit proof search");
    search->add_option("--format", config.format)->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    search->add_option("--seed", config.seed, "Random seed")->required();
    search->add_option("--budget", config.budget, "Draws allowed for the partition criterion");
    search->add_option("--attempts", config.attempts, "Grow-and-minimize attempts");
    auto *aut = app.add_subcommand("aut", "Automorphism group order");
    common(aut, false);
    aut->add_option("--config", config.config_label, "square2q, pentagram3q or rectangle4q");
    aut->add_option("--crossing", config.crossing_path, "Proof file; crossing graph over its bases");
    aut->add_option("--overlap", config.overlap, "Shared rays defining an edge");
    auto *tables = app.add_subcommand("emit-tables", "Histogram tables per proof type");
    common(tables, true);
    auto *paper = app.add_subcommand("paper-proof", "Emit a named reference proof as a proof file");
    common(paper, false);
    paper->add_option("--name", config.paper_name, "18-9, eleven, 80-21, 80-22 or 80-23")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    }
    CLI::App *chosen = app.get_subcommands().front();
    config.command = chosen->get_name();
    Reporter rep(config, out);
    try {
        if (config.command == "rays") {
            return cmd_rays(config, rep);
        }
        if (config.command == "bases") {
            return cmd_bases(config, rep);
        }
        if (config.command == "distances") {
            return cmd_distances(config, rep);
        }
        if (config.command == "parity-proofs") {
            return cmd_parity_proofs(config, rep);
        }
        if (config.command == "verify") {
            return cmd_verify(config, rep);
        }
        if (config.command == "critical") {
            return cmd_critical(config, rep);
        }
        if (config.command == "search4q") {
            return cmd_search4q(config, rep);
        }
        if (config.command == "aut") {
            return cmd_aut(config, rep);
        }
        if (config.command == "emit-tables") {
            return cmd_emit_tables(config, rep);
        }
        return cmd_paper_proof(config, rep);
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bks::cli
