#include "pih/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

namespace pih {

namespace {

std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

struct ConditionGroup {
    std::string condition;
    std::vector<GroupLabel> labels;  // insertion order within the condition
};

std::vector<ConditionGroup> by_condition(const ScoreMatrix& matrix) {
    std::vector<ConditionGroup> groups;
    for (const GroupLabel& label : matrix.order) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const ConditionGroup& g) {
            return g.condition == label.condition;
        });
        if (it == groups.end()) {
            groups.push_back({label.condition, {label}});
        } else {
            it->labels.push_back(label);
        }
    }
    return groups;
}

// Row keys for a cell; when the matrix was built without per-row bookkeeping,
// rows are grouped five to a replicate, the bundled design's judge count.
std::vector<std::pair<int, int>> keys_for(const ScoreMatrix& matrix, const GroupLabel& label) {
    auto it = matrix.row_keys.find(label);
    if (it != matrix.row_keys.end() && !it->second.empty()) return it->second;
    std::vector<std::pair<int, int>> keys;
    const size_t n = matrix.at(label).scores.size();
    for (size_t i = 0; i < n; ++i)
        keys.push_back({static_cast<int>(i / 5) + 1, static_cast<int>(i % 5) + 1});
    return keys;
}

}  // namespace

std::string format_p(double p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5g", p);
    return buf;
}

ScoreTable emit_score_table(const ScoreMatrix& matrix) {
    std::ostringstream csv;
    std::ostringstream md;

    for (const ConditionGroup& group : by_condition(matrix)) {
        // Union of row keys across the block, in (replicate, judge_rep) order.
        std::set<std::pair<int, int>> rows;
        for (const GroupLabel& label : group.labels)
            for (const auto& key : keys_for(matrix, label)) rows.insert(key);

        csv << "# " << group.condition << "\n";
        csv << "trial";
        md << "### " << group.condition << "\n\n";
        md << "| trial |";
        for (const GroupLabel& label : group.labels) {
            csv << "," << label.model;
            md << " " << label.model << " |";
        }
        csv << "\n";
        md << "\n|---|";
        for (size_t i = 0; i < group.labels.size(); ++i) md << "---|";
        md << "\n";

        for (const auto& [rep, jrep] : rows) {
            const std::string row_label =
                group.condition + std::to_string(rep) + "-" + std::to_string(jrep);
            csv << row_label;
            md << "| " << row_label << " |";
            for (const GroupLabel& label : group.labels) {
                const auto keys = keys_for(matrix, label);
                const auto it = std::find(keys.begin(), keys.end(), std::make_pair(rep, jrep));
                std::string value;
                if (it != keys.end())
                    value = std::to_string(
                        matrix.at(label).scores[static_cast<size_t>(it - keys.begin())]);
                csv << "," << value;
                md << " " << value << " |";
            }
            csv << "\n";
            md << "\n";
        }

        csv << "Ave";
        md << "| Ave |";
        for (const GroupLabel& label : group.labels) {
            const std::string mean = fmt(descriptive(matrix.at(label)).mean, 2);
            csv << "," << mean;
            md << " " << mean << " |";
        }
        csv << "\n\n";
        md << "\n\n";
    }
    return {csv.str(), md.str()};
}

std::string emit_significance_table(const std::vector<WelchResult>& results) {
    std::ostringstream md;
    md << "| pair | t | df | p | stars |\n";
    md << "|---|---|---|---|---|\n";
    for (const WelchResult& r : results) {
        md << "| " << r.label_a.str() << " vs " << r.label_b.str() << " | " << fmt(r.t, 4)
           << " | " << fmt(r.df, 3) << " | " << format_p(r.p_one_tailed) << " | "
           << stars_label(r.stars) << " |\n";
    }
    return md.str();
}

std::string emit_beeswarm_svg(const FigureSpec& spec) {
    const double margin_left = 48;
    const double margin_right = 16;
    const double margin_top = 24 + 22.0 * static_cast<double>(spec.comparisons.size());
    const double margin_bottom = 40;
    const double plot_w = spec.width - margin_left - margin_right;
    const double plot_h = spec.height - margin_top - margin_bottom;
    const double radius = 3.5;
    const size_t n_groups = spec.groups.size();
    const double column_w = n_groups ? plot_w / static_cast<double>(n_groups) : plot_w;

    const double scale_min = 0.0;
    const double scale_max = 10.0;
    const auto y_of = [&](double score) {
        return margin_top + plot_h * (scale_max - score) / (scale_max - scale_min);
    };
    const auto x_center = [&](size_t group) {
        return margin_left + column_w * (static_cast<double>(group) + 0.5);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(spec.width, 0)
        << "\" height=\"" << fmt(spec.height, 0) << "\" viewBox=\"0 0 " << fmt(spec.width, 0)
        << " " << fmt(spec.height, 0) << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!spec.title.empty())
        svg << "  <text x=\"" << fmt(spec.width / 2, 1)
            << "\" y=\"16\" text-anchor=\"middle\" font-size=\"13\">" << spec.title
            << "</text>\n";

    // Axis with integer score ticks.
    svg << "  <line x1=\"" << fmt(margin_left, 1) << "\" y1=\"" << fmt(margin_top, 1)
        << "\" x2=\"" << fmt(margin_left, 1) << "\" y2=\"" << fmt(margin_top + plot_h, 1)
        << "\" stroke=\"black\"/>\n";
    for (int tick = 0; tick <= 10; tick += 2) {
        const double y = y_of(tick);
        svg << "  <line x1=\"" << fmt(margin_left - 4, 1) << "\" y1=\"" << fmt(y, 1)
            << "\" x2=\"" << fmt(margin_left, 1) << "\" y2=\"" << fmt(y, 1)
            << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << fmt(margin_left - 8, 1) << "\" y=\"" << fmt(y + 4, 1)
            << "\" text-anchor=\"end\" font-size=\"11\">" << tick << "</text>\n";
    }

    std::mt19937 rng(spec.jitter_seed);
    std::uniform_real_distribution<double> base_jitter(-radius, radius);

    for (size_t g = 0; g < n_groups; ++g) {
        const FigureGroup& group = spec.groups[g];
        const double cx = x_center(g);
        const double max_offset = column_w * 0.5 - radius - 2;

        // Greedy beeswarm: seeded base offset, then step outward until the
        // dot no longer collides with an already placed dot.
        std::vector<std::pair<double, double>> placed;  // (x, y)
        for (int score : group.samples.scores) {
            const double y = y_of(score);
            const double base = base_jitter(rng);
            double offset = base;
            const double step = radius * 1.05;
            for (int attempt = 0; attempt < 64; ++attempt) {
                const int k = (attempt + 1) / 2;
                const double sign = (attempt % 2 == 1) ? 1.0 : -1.0;
                offset = base + sign * step * k;
                if (attempt == 0) offset = base;
                if (std::fabs(offset) > max_offset) continue;
                bool collides = false;
                for (const auto& [px, py] : placed) {
                    const double dx = (cx + offset) - px;
                    const double dy = y - py;
                    if (dx * dx + dy * dy < (2 * radius) * (2 * radius)) {
                        collides = true;
                        break;
                    }
                }
                if (!collides) break;
            }
            placed.push_back({cx + offset, y});
            svg << "  <circle cx=\"" << fmt(cx + offset, 2) << "\" cy=\"" << fmt(y, 2)
                << "\" r=\"" << fmt(radius, 1)
                << "\" fill=\"steelblue\" fill-opacity=\"0.75\"/>\n";
        }

        // Whisker line, median bar, mean cross.
        const DescriptiveStats& s = group.stats;
        svg << "  <line x1=\"" << fmt(cx, 2) << "\" y1=\"" << fmt(y_of(s.whisker_low), 2)
            << "\" x2=\"" << fmt(cx, 2) << "\" y2=\"" << fmt(y_of(s.whisker_high), 2)
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        const double bar_half = column_w * 0.3;
        svg << "  <line x1=\"" << fmt(cx - bar_half, 2) << "\" y1=\"" << fmt(y_of(s.median), 2)
            << "\" x2=\"" << fmt(cx + bar_half, 2) << "\" y2=\"" << fmt(y_of(s.median), 2)
            << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        const double cross = 4.5;
        const double my = y_of(s.mean);
        svg << "  <path d=\"M " << fmt(cx - cross, 2) << " " << fmt(my - cross, 2) << " L "
            << fmt(cx + cross, 2) << " " << fmt(my + cross, 2) << " M " << fmt(cx - cross, 2)
            << " " << fmt(my + cross, 2) << " L " << fmt(cx + cross, 2) << " "
            << fmt(my - cross, 2) << "\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";

        svg << "  <text x=\"" << fmt(cx, 2) << "\" y=\"" << fmt(margin_top + plot_h + 16, 1)
            << "\" text-anchor=\"middle\" font-size=\"11\">" << group.label << "</text>\n";
    }

    // Comparison brackets, stacked above the plot area.
    for (size_t i = 0; i < spec.comparisons.size(); ++i) {
        const WelchResult& r = spec.comparisons[i];
        size_t ia = n_groups, ib = n_groups;
        for (size_t g = 0; g < n_groups; ++g) {
            if (spec.groups[g].samples.label == r.label_a) ia = g;
            if (spec.groups[g].samples.label == r.label_b) ib = g;
        }
        if (ia == n_groups || ib == n_groups) continue;
        const double y = margin_top - 10 - 22.0 * static_cast<double>(i);
        const double xa = x_center(ia);
        const double xb = x_center(ib);
        svg << "  <path d=\"M " << fmt(xa, 2) << " " << fmt(y + 5, 2) << " L " << fmt(xa, 2)
            << " " << fmt(y, 2) << " L " << fmt(xb, 2) << " " << fmt(y, 2) << " L "
            << fmt(xb, 2) << " " << fmt(y + 5, 2) << "\" stroke=\"black\" fill=\"none\"/>\n";
        svg << "  <text x=\"" << fmt((xa + xb) / 2, 2) << "\" y=\"" << fmt(y - 3, 2)
            << "\" text-anchor=\"middle\" font-size=\"11\">" << stars_label(r.stars)
            << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

std::string emit_full_report(const ScoreMatrix& matrix,
                             const std::vector<WelchResult>& results,
                             const std::vector<std::string>& figure_files, double baseline) {
    std::ostringstream md;
    md << "# Hallucination score report\n\n";

    md << "## Groups\n\n";
    if (matrix.order.empty()) md << "(no score groups)\n";
    for (const GroupLabel& label : matrix.order) {
        const SampleSet& cell = matrix.at(label);
        if (cell.scores.empty()) {
            md << "- " << label.str() << ": no parseable scores\n";
            continue;
        }
        const DescriptiveStats s = descriptive(cell);
        md << "- " << label.str() << ": n=" << s.n << ", mean " << fmt(s.mean, 2)
           << ", median " << fmt(s.median, 1);
        auto failures = matrix.parse_failures.find(label);
        if (failures != matrix.parse_failures.end() && failures->second > 0)
            md << ", parse failures " << failures->second;
        if (s.mean <= baseline) md << " (at grounded baseline)";
        md << "\n";
    }
    md << "\n## Scores\n\n" << emit_score_table(matrix).markdown;
    md << "## Significance\n\n";
    if (results.empty())
        md << "(no comparisons requested)\n";
    else
        md << emit_significance_table(results);
    md << "\n## Figures\n\n";
    if (figure_files.empty()) md << "(no figures emitted)\n";
    for (const auto& f : figure_files) md << "- ![figure](" << f << ")\n";
    return md.str();
}

}  // namespace pih
