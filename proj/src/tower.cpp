#include "fano4/tower.hpp"

#include <charconv>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "fano4/errors.hpp"

namespace fano4 {

std::string to_string(TowerOp op) {
    switch (op) {
        case TowerOp::BlowUpPoint: return "blowup_point";
        case TowerOp::FlipLines: return "flip_lines";
        case TowerOp::BlowUpSurface: return "blowup_surface";
        case TowerOp::BlowDownSurface: return "blowdown_surface";
    }
    return "?";
}

namespace {

constexpr const char* kSurfaceKeys[] = {"ks2",   "ks_dot_kw", "kw2",  "c2n",
                                        "chios", "h11s",      "h20s", "b1s"};

const std::vector<std::string>& keys_for(TowerOp op) {
    static const std::vector<std::string> none;
    static const std::vector<std::string> flip{"n"};
    static const std::vector<std::string> surface(std::begin(kSurfaceKeys),
                                                  std::end(kSurfaceKeys));
    switch (op) {
        case TowerOp::FlipLines: return flip;
        case TowerOp::BlowUpSurface:
        case TowerOp::BlowDownSurface: return surface;
        default: return none;
    }
}

Int parse_int(std::string_view text, int line, int column) {
    Int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw parse_error(line, column,
                          "expected an integer, got '" + std::string(text) + "'");
    return value;
}

void set_field(SurfaceData& data, std::string_view key, Int value) {
    if (key == "ks2") data.ks2 = value;
    else if (key == "ks_dot_kw") data.ks_dot_kw = value;
    else if (key == "kw2") data.kw2 = value;
    else if (key == "c2n") data.c2n = value;
    else if (key == "chios") data.chios = value;
    else if (key == "h11s") data.h11s = static_cast<int>(value);
    else if (key == "h20s") data.h20s = static_cast<int>(value);
    else if (key == "b1s") data.b1s = static_cast<int>(value);
}

Int get_field(const SurfaceData& data, std::string_view key) {
    if (key == "ks2") return data.ks2;
    if (key == "ks_dot_kw") return data.ks_dot_kw;
    if (key == "kw2") return data.kw2;
    if (key == "c2n") return data.c2n;
    if (key == "chios") return data.chios;
    if (key == "h11s") return data.h11s;
    if (key == "h20s") return data.h20s;
    return data.b1s;
}

struct OpenStep {
    TowerStep step;
    int line = 0;  // where the step: directive sits
    std::map<std::string, bool, std::less<>> seen;
};

void finalize(const OpenStep& open, std::vector<TowerStep>& steps) {
    std::string missing;
    for (const std::string& key : keys_for(open.step.op))
        if (!open.seen.count(key)) missing += missing.empty() ? key : ", " + key;
    if (!missing.empty())
        throw parse_error(open.line, 1,
                          "step '" + to_string(open.step.op) + "' is missing key(s): " +
                              missing);
    steps.push_back(open.step);
}

}  // namespace

TowerConfig parse_tower(const std::string& text) {
    TowerConfig config;
    bool started = false;
    std::optional<OpenStep> open;

    int line_no = 0;
    std::size_t pos = 0;
    bool saw_any_directive = false;
    while (pos <= text.size()) {
        if (pos == text.size() && line_no > 0) break;
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string_view line(text.data() + pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos) continue;          // blank
        if (line[first] == '#') continue;                        // comment

        const std::size_t colon = line.find(':');
        if (colon == std::string_view::npos || colon == 0)
            throw parse_error(line_no, 1, "expected 'key: value'");
        const std::string_view key = line.substr(0, colon);
        if (key.find_first_of(" \t") != std::string_view::npos)
            throw parse_error(line_no, 1, "expected 'key: value'");

        std::size_t value_start = colon + 1;
        while (value_start < line.size() && (line[value_start] == ' ' || line[value_start] == '\t'))
            ++value_start;
        const std::string_view value = line.substr(value_start);
        const int value_col = static_cast<int>(value_start) + 1;
        if (value.empty())
            throw parse_error(line_no, value_col, "missing value for '" + std::string(key) + "'");

        saw_any_directive = true;
        if (key == "start") {
            if (started) throw parse_error(line_no, 1, "duplicate start directive");
            if (value != "p4")
                throw parse_error(line_no, value_col,
                                  "unknown start '" + std::string(value) + "' (expected p4)");
            started = true;
            continue;
        }
        if (!started)
            throw parse_error(line_no, 1, "the first directive must be 'start: p4'");

        if (key == "step") {
            if (open) {
                finalize(*open, config.steps);
                open.reset();
            }
            TowerOp op;
            if (value == "blowup_point") op = TowerOp::BlowUpPoint;
            else if (value == "flip_lines") op = TowerOp::FlipLines;
            else if (value == "blowup_surface") op = TowerOp::BlowUpSurface;
            else if (value == "blowdown_surface") op = TowerOp::BlowDownSurface;
            else
                throw parse_error(line_no, value_col,
                                  "unknown operation '" + std::string(value) + "'");
            if (keys_for(op).empty()) {
                config.steps.push_back(TowerStep{op, 0, {}});
            } else {
                open = OpenStep{TowerStep{op, 0, {}}, line_no, {}};
            }
            continue;
        }

        // a data key; it must belong to the open step
        if (!open)
            throw parse_error(line_no, 1,
                              "key '" + std::string(key) + "' outside any step");
        const auto& allowed = keys_for(open->step.op);
        bool known = false;
        for (const std::string& k : allowed) known = known || k == key;
        if (!known)
            throw parse_error(line_no, 1,
                              "step '" + to_string(open->step.op) + "' does not take key '" +
                                  std::string(key) + "'");
        if (open->seen.count(key))
            throw parse_error(line_no, 1, "duplicate key '" + std::string(key) + "'");
        open->seen.emplace(std::string(key), true);

        const Int parsed = parse_int(value, line_no, value_col);
        if (open->step.op == TowerOp::FlipLines) open->step.n = parsed;
        else set_field(open->step.data, key, parsed);
    }

    if (open) finalize(*open, config.steps);
    if (!started) {
        if (saw_any_directive)
            throw parse_error(1, 1, "the first directive must be 'start: p4'");
        throw parse_error(1, 1, "empty config: expected 'start: p4'");
    }
    return config;
}

std::string serialize_tower(const TowerConfig& config) {
    std::string out = "start: p4\n";
    for (const TowerStep& step : config.steps) {
        out += "step: " + to_string(step.op) + "\n";
        if (step.op == TowerOp::FlipLines) {
            out += "n: " + std::to_string(step.n) + "\n";
        } else if (step.op == TowerOp::BlowUpSurface || step.op == TowerOp::BlowDownSurface) {
            for (const char* key : kSurfaceKeys)
                out += std::string(key) + ": " + std::to_string(get_field(step.data, key)) +
                       "\n";
        }
    }
    return out;
}

std::vector<FourfoldRecord> run_tower(const TowerConfig& config) {
    std::vector<FourfoldRecord> trace{p4_record()};
    trace.reserve(config.steps.size() + 1);
    for (std::size_t i = 0; i < config.steps.size(); ++i) {
        const TowerStep& step = config.steps[i];
        try {
            switch (step.op) {
                case TowerOp::BlowUpPoint:
                    trace.push_back(blow_up_point(trace.back()));
                    break;
                case TowerOp::FlipLines:
                    trace.push_back(flip_lines(trace.back(), step.n));
                    break;
                case TowerOp::BlowUpSurface:
                    trace.push_back(blow_up_surface(trace.back(), step.data));
                    break;
                case TowerOp::BlowDownSurface:
                    trace.push_back(blow_down_surface(trace.back(), step.data));
                    break;
            }
        } catch (const precondition_error& e) {
            throw tower_error(static_cast<int>(i) + 1,
                              to_string(step.op) + ": " + e.what());
        }
    }
    return trace;
}

}  // namespace fano4
