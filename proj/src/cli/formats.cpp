#include <charconv>
#include <fstream>
#include <sstream>

#include "lcbs/cli.hpp"

namespace lcbs::cli {

namespace {

bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && is_space(text[k])) ++k;
        const auto start = k;
        while (k < text.size() && !is_space(text[k])) ++k;
        if (k > start) tokens.push_back(text.substr(start, k - start));
    }
    return tokens;
}

template <typename T>
T parse_number(std::string_view token, std::string_view what) {
    T value{};
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw InputError("invalid " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

std::vector<Symbol> parse_sequence(std::string_view text) {
    std::vector<Symbol> seq;
    for (auto token : split_ws(text)) seq.push_back(parse_number<Symbol>(token, "integer"));
    return seq;
}

std::vector<Symbol> read_sequence(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_sequence(buf.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string format_sequence(const std::vector<Symbol>& seq) {
    std::string out;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(seq[k]);
    }
    out += '\n';
    return out;
}

WitnessFile parse_witness_file(std::string_view text) {
    WitnessFile file;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const auto line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (tokens.front() == "peak") {
            if (tokens.size() != 2) throw InputError(where + "expected 'peak <h>'");
            if (file.peak) throw InputError(where + "duplicate peak line");
            file.peak = parse_number<std::size_t>(tokens[1], "peak index");
            continue;
        }
        if (tokens.size() != 2) throw InputError(where + "expected 'i j'");
        file.pairs.emplace_back(parse_number<std::size_t>(tokens[0], "index"),
                                parse_number<std::size_t>(tokens[1], "index"));
    }
    if (!file.pairs.empty() && !file.peak) throw InputError("missing 'peak <h>' line");
    if (file.peak && *file.peak >= file.pairs.size()) {
        throw InputError("peak index " + std::to_string(*file.peak) + " out of range for " +
                         std::to_string(file.pairs.size()) + " points");
    }
    return file;
}

std::string format_witness_file(const Witness& w) {
    std::string out;
    for (const auto& p : w.points) out += std::to_string(p.i) + ' ' + std::to_string(p.j) + '\n';
    if (w.peak_pos) out += "peak " + std::to_string(*w.peak_pos) + '\n';
    return out;
}

Witness witness_from_file(const SequencePair& pair, const WitnessFile& file) {
    Witness w;
    for (const auto& [i, j] : file.pairs) {
        Symbol value = 0;
        if (i < pair.n()) {
            value = pair.a[i];
        } else if (j < pair.m()) {
            value = pair.b[j];
        }
        w.points.push_back({i, j, value});
    }
    w.peak_pos = file.peak;
    return w;
}

nlohmann::json outcome_to_json(const LcbsOutcome& outcome, const SequencePair& pair) {
    nlohmann::json j;
    j["engine"] = std::string(to_string(outcome.stats.engine));
    j["n"] = pair.n();
    j["m"] = pair.m();
    j["matches"] = outcome.stats.match_count;
    j["length"] = outcome.length;
    if (outcome.witness) {
        nlohmann::json w;
        w["values"] = outcome.witness->values();
        auto pairs = nlohmann::json::array();
        for (const auto& p : outcome.witness->points) pairs.push_back({p.i, p.j});
        w["pairs"] = std::move(pairs);
        w["peak_pos"] = outcome.witness->peak_pos ? nlohmann::json(*outcome.witness->peak_pos) : nlohmann::json();
        j["witness"] = std::move(w);
    }
    if (outcome.peak) j["peak"] = {{"i", outcome.peak->i}, {"j", outcome.peak->j}, {"value", outcome.peak->value}};
    j["elapsed_ms"] = outcome.stats.elapsed_ms;
    j["aux_elements"] = outcome.stats.aux_elements;
    if (outcome.stats.probes) j["probes"] = *outcome.stats.probes;
    return j;
}

Witness witness_from_json(const nlohmann::json& witness) {
    Witness w;
    const auto& values = witness.at("values");
    const auto& pairs = witness.at("pairs");
    if (values.size() != pairs.size()) throw InputError("witness json: values and pairs differ in length");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        w.points.push_back({pairs[k].at(0).get<std::size_t>(), pairs[k].at(1).get<std::size_t>(),
                            values[k].get<Symbol>()});
    }
    if (!witness.at("peak_pos").is_null()) w.peak_pos = witness.at("peak_pos").get<std::size_t>();
    return w;
}

std::string vertices_to_jsonl(const SparseDag& dag, std::optional<VertexId> peak) {
    std::string out;
    for (VertexId v = 0; v < dag.size(); ++v) {
        const auto rec = dag.vertex(v);
        nlohmann::json j{{"id", rec.id},       {"i", rec.match.i},   {"j", rec.match.j},
                         {"value", rec.match.value}, {"inc", rec.inc}, {"dec", rec.dec}};
        j["pred"] = rec.pred ? nlohmann::json(*rec.pred) : nlohmann::json();
        j["succ"] = rec.succ ? nlohmann::json(*rec.succ) : nlohmann::json();
        out += j.dump();
        out += '\n';
    }
    out += nlohmann::json{{"peak", peak ? nlohmann::json(*peak) : nlohmann::json()}}.dump();
    out += '\n';
    return out;
}

}  // namespace lcbs::cli
