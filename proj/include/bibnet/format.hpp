#ifndef BIBNET_FORMAT_HPP
#define BIBNET_FORMAT_HPP

#include <optional>
#include <string>

namespace bibnet {

/// Decimal separator used when rendering numbers. Comma style matches the
/// source tables of the bibliographic reports this tool reproduces.
enum class DecimalStyle { Period, Comma };

/// Reads the BIBNET_DECIMAL environment variable ("comma" or "period").
DecimalStyle decimal_style_from_env();

/// Fixed-point rendering, e.g. format_fixed(0.0708, 3) == "0.071".
std::string format_fixed(double value, int decimals,
                         DecimalStyle style = DecimalStyle::Period);

/// Significant-digit rendering (%g style), used by the metric frame writer.
std::string format_sig(double value, int significant = 6,
                       DecimalStyle style = DecimalStyle::Period);

/// Marker printed for undefined cells (no-edge densities, 0/0 ratios, ...).
inline const char* undefined_marker() { return "-"; }

/// format_fixed for optional values; nullopt renders as the marker.
std::string format_opt(std::optional<double> value, int decimals,
                       DecimalStyle style = DecimalStyle::Period);

} // namespace bibnet

#endif
