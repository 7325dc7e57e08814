#pragma once

// Plain-text CSV for sequences, spectra and analysis tables.
//
//   # Ts=0.5                 optional metadata, one "# key=value" per line
//   # method=fast-fft
//   n,re,im                  header
//   0,1,0                    index, real part, imaginary part
//   1,0.70710678118654757,0
//
// Numbers are written in shortest round-trip form; the reader also accepts
// fixed 17-significant-digit output. See docs/sequence-format.md.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "zpinterp/sequence.hpp"

namespace zpinterp {

using Metadata = std::vector<std::pair<std::string, std::string>>;

inline constexpr std::string_view kSequenceHeader = "n,re,im";

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct SequenceFile {
    Sequence sequence;
    Metadata metadata;

    [[nodiscard]] std::optional<std::string> find(std::string_view key) const
    {
        for (const auto& [k, v] : metadata) {
            if (k == key) {
                return v;
            }
        }
        return std::nullopt;
    }
};

/// Shortest decimal form that parses back to the same double.
inline std::string format_double(double value)
{
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::optional<double> parse_double(std::string_view field)
{
    field = trim(field);
    double value = 0.0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

inline std::optional<std::size_t> parse_index(std::string_view field)
{
    field = trim(field);
    std::size_t value = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        return std::nullopt;
    }
    return value;
}

inline std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

inline void check_sink(const std::ostream& out)
{
    if (!out) {
        throw std::runtime_error("failed to write output");
    }
}

} // namespace detail

inline SequenceFile read_sequence_file(std::istream& in)
{
    Metadata metadata;
    std::optional<double> sample_period;
    std::vector<cplx> samples;
    bool seen_header = false;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = detail::trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto body = detail::trim(line.substr(1));
            const auto eq = body.find('=');
            if (eq == std::string_view::npos) {
                continue;
            }
            std::string key(detail::trim(body.substr(0, eq)));
            std::string value(detail::trim(body.substr(eq + 1)));
            if (key == "Ts") {
                const auto ts = detail::parse_double(value);
                if (!ts || *ts <= 0.0) {
                    throw ParseError(line_no, "invalid sample period '" + value + "'");
                }
                sample_period = *ts;
            }
            metadata.emplace_back(std::move(key), std::move(value));
            continue;
        }
        if (!seen_header) {
            if (line != kSequenceHeader) {
                throw ParseError(line_no, "expected header 'n,re,im'");
            }
            seen_header = true;
            continue;
        }
        const auto fields = detail::split_fields(line);
        if (fields.size() != 3) {
            throw ParseError(line_no, "expected 3 fields, found " + std::to_string(fields.size()));
        }
        const auto index = detail::parse_index(fields[0]);
        if (!index || *index != samples.size()) {
            throw ParseError(line_no, "expected row index " + std::to_string(samples.size()));
        }
        const auto re = detail::parse_double(fields[1]);
        if (!re) {
            throw ParseError(line_no, "invalid real part '" + std::string(fields[1]) + "'");
        }
        const auto im = detail::parse_double(fields[2]);
        if (!im) {
            throw ParseError(line_no, "invalid imaginary part '" + std::string(fields[2]) + "'");
        }
        samples.emplace_back(*re, *im);
    }
    if (!seen_header) {
        throw ParseError(line_no + 1, "missing header 'n,re,im'");
    }
    if (samples.empty()) {
        throw ParseError(line_no + 1, "no samples");
    }
    return {Sequence(std::move(samples), sample_period), std::move(metadata)};
}

inline Sequence read_sequence(std::istream& in)
{
    return read_sequence_file(in).sequence;
}

/// Writes the sequence file. Ts is emitted first when the sequence carries a
/// sample period; any "Ts" entry in metadata is then skipped.
inline void write_sequence(const Sequence& x, std::ostream& out, const Metadata& metadata = {})
{
    if (const auto ts = x.sample_period()) {
        out << "# Ts=" << format_double(*ts) << '\n';
    }
    for (const auto& [key, value] : metadata) {
        if (key == "Ts" && x.sample_period()) {
            continue;
        }
        out << "# " << key << '=' << value << '\n';
    }
    out << kSequenceHeader << '\n';
    for (std::size_t n = 0; n < x.size(); ++n) {
        out << n << ',' << format_double(x[n].real()) << ',' << format_double(x[n].imag()) << '\n';
    }
    out.flush();
    detail::check_sink(out);
}

/// Spectra share the sequence layout; the index column is the bin k.
inline void write_spectrum(const SpectrumSamples& spectrum, std::ostream& out,
                           const Metadata& metadata = {})
{
    write_sequence(Sequence({spectrum.values().begin(), spectrum.values().end()}), out, metadata);
}

/// A table cell. Non-finite doubles (the -inf dB sentinel) serialize as an empty field.
using TableCell = std::variant<std::int64_t, double, std::string>;
using TableRow = std::vector<TableCell>;

inline void write_table(std::span<const TableRow> rows, std::span<const std::string> columns,
                        std::ostream& out, const Metadata& metadata = {})
{
    for (const auto& [key, value] : metadata) {
        out << "# " << key << '=' << value << '\n';
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size()) {
            throw std::domain_error("table row width does not match the column count");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out << ',';
            }
            std::visit(
                [&out](const auto& cell) {
                    using T = std::decay_t<decltype(cell)>;
                    if constexpr (std::is_same_v<T, double>) {
                        if (std::isfinite(cell)) {
                            out << format_double(cell);
                        }
                    } else {
                        out << cell;
                    }
                },
                row[c]);
        }
        out << '\n';
    }
    out.flush();
    detail::check_sink(out);
}

} // namespace zpinterp
