#pragma once

#include <string>
#include <vector>

namespace rssl::cli {

/// "mean±std" with two decimals, switching to scientific notation outside
/// [0.001, 10000) the way the comparison tables do.
std::string format_pm(double mean, double std_dev);

/// Space-aligned text table; first row is the header.
std::string render_text_table(const std::vector<std::vector<std::string>>& rows);

/// GitHub-style pipe table.
std::string render_markdown_table(const std::vector<std::vector<std::string>>& rows);

/// Plain CSV (no quoting; cells must not contain commas).
std::string render_csv(const std::vector<std::vector<std::string>>& rows);

struct SvgSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained line plot, one polyline per series, optional log10 y axis.
std::string svg_line_plot(const std::vector<SvgSeries>& series, const std::string& x_label,
                          const std::string& y_label, bool log_y);

struct SvgBox {
    std::string label;
    std::vector<double> values;
};

/// Box-and-whisker summary (min, quartiles, max) per labelled group.
std::string svg_box_plot(const std::vector<SvgBox>& boxes, const std::string& y_label, bool log_y);

}  // namespace rssl::cli
