#pragma once

// zpinterp command-line front end. run_cli() is kept separate from main() so
// the tests can drive every subcommand in-process.

#include <CLI11.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zpinterp/zpinterp.hpp"

namespace zpinterp::cli {

/// A failure attributable to one command-line flag.
class FlagError : public std::runtime_error {
public:
    FlagError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

namespace detail {

struct Streams {
    std::istream& in;
    std::ostream& out;
};

class InputFile {
public:
    InputFile(const std::string& path, const std::string& flag, std::istream& stdin_stream)
    {
        if (path == "-") {
            stream_ = &stdin_stream;
            return;
        }
        file_ = std::make_unique<std::ifstream>(path);
        if (!*file_) {
            throw FlagError(flag, "cannot open input file '" + path + "'");
        }
        stream_ = file_.get();
    }

    std::istream& get() { return *stream_; }

private:
    std::unique_ptr<std::ifstream> file_;
    std::istream* stream_ = nullptr;
};

class OutputFile {
public:
    OutputFile(const std::string& path, const std::string& flag, std::ostream& stdout_stream)
    {
        if (path == "-") {
            stream_ = &stdout_stream;
            return;
        }
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_) {
            throw FlagError(flag, "cannot open output file '" + path + "'");
        }
        stream_ = file_.get();
    }

    std::ostream& get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

inline SequenceFile load(const std::string& path, const std::string& flag, std::istream& in)
{
    InputFile file(path, flag, in);
    try {
        return read_sequence_file(file.get());
    } catch (const std::exception& e) {
        throw FlagError(flag, "'" + path + "' " + e.what());
    }
}

template <class T>
std::string join(const std::vector<T>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += ',';
        }
        if constexpr (std::is_floating_point_v<T>) {
            out += format_double(values[i]);
        } else {
            out += std::to_string(values[i]);
        }
    }
    return out;
}

} // namespace detail

struct GenOptions {
    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<double> harmonics;
    std::vector<double> amplitudes;
    double center = 0.0;
    double width = 1.0;
    long band = -1;
    bool bandlimited = false;
    double ts = 1.0;
    std::string out = "-";
};

inline void run_gen(const GenOptions& opt, detail::Streams io)
{
    SignalSpec spec;
    try {
        spec.kind = parse_signal_kind(opt.kind);
    } catch (const std::domain_error& e) {
        throw FlagError("--kind", e.what());
    }
    spec.length = opt.n;
    spec.seed = opt.seed;
    spec.harmonics = opt.harmonics;
    spec.amplitudes.assign(opt.amplitudes.begin(), opt.amplitudes.end());
    spec.center = opt.center;
    spec.width = opt.width;
    spec.band = opt.band;
    spec.bandlimited = opt.bandlimited;
    spec.sample_period = opt.ts;
    if (spec.kind == SignalKind::gaussian_pulse && opt.center == 0.0) {
        spec.center = static_cast<double>(opt.n) / 2.0;
    }

    const double limit = (static_cast<double>(opt.n) - 1.0) / 2.0;
    if (spec.kind == SignalKind::tone || spec.kind == SignalKind::multitone) {
        if (opt.harmonics.empty()) {
            throw FlagError("--harmonics", "required for kind '" + opt.kind + "'");
        }
        if (spec.kind == SignalKind::tone && opt.harmonics.size() != 1) {
            throw FlagError("--harmonics", "a tone takes exactly one harmonic");
        }
        if (!opt.amplitudes.empty() && opt.amplitudes.size() != opt.harmonics.size()) {
            throw FlagError("--amplitudes", "count must match --harmonics");
        }
        for (double h : opt.harmonics) {
            if (opt.bandlimited && std::abs(h) > limit) {
                throw FlagError("--harmonics", "harmonic " + format_double(h) +
                                                   " exceeds the band limit (N-1)/2 = " + format_double(limit));
            }
        }
    }
    if (spec.kind == SignalKind::bandlimited_random && static_cast<double>(opt.band) > limit) {
        throw FlagError("--band", "band " + std::to_string(opt.band) +
                                      " exceeds the band limit (N-1)/2 = " + format_double(limit));
    }

    const Sequence x = generate(spec);
    Metadata meta{{"N", std::to_string(opt.n)}, {"kind", std::string(to_string(spec.kind))}};
    switch (spec.kind) {
    case SignalKind::tone:
    case SignalKind::multitone:
        meta.emplace_back("harmonics", detail::join(opt.harmonics));
        if (!opt.amplitudes.empty()) {
            meta.emplace_back("amplitudes", detail::join(opt.amplitudes));
        }
        break;
    case SignalKind::bandlimited_random:
        meta.emplace_back("band", std::to_string(opt.band < 0 ? (opt.n - 1) / 2 : opt.band));
        meta.emplace_back("seed", std::to_string(opt.seed));
        break;
    case SignalKind::gaussian_pulse:
        meta.emplace_back("center", format_double(spec.center));
        meta.emplace_back("width", format_double(spec.width));
        break;
    }
    detail::OutputFile out(opt.out, "--out", io.out);
    write_sequence(x, out.get(), meta);
}

struct UpsampleOptions {
    std::string in;
    std::size_t factor = 2;
    std::string method = "fft";
    std::string out = "-";
};

inline void run_upsample(const UpsampleOptions& opt, detail::Streams io)
{
    Method method{};
    try {
        method = parse_method(opt.method);
    } catch (const std::domain_error& e) {
        throw FlagError("--method", e.what());
    }
    const SequenceFile source = detail::load(opt.in, "--in", io.in);
    const Sequence y = upsample(source.sequence, UpsampleRequest(opt.factor, method));
    const Metadata meta{{"N", std::to_string(y.size())},
                        {"M", std::to_string(opt.factor)},
                        {"method", std::string(to_string(method))},
                        {"source_N", std::to_string(source.sequence.size())}};
    detail::OutputFile out(opt.out, "--out", io.out);
    write_sequence(y, out.get(), meta);
}

struct SpectrumOptions {
    std::string in;
    std::size_t factor = 1;
    std::string out = "-";
};

inline void run_spectrum(const SpectrumOptions& opt, detail::Streams io)
{
    const SequenceFile source = detail::load(opt.in, "--in", io.in);
    const SpectrumSamples spectrum = spectrum_upsample(source.sequence, opt.factor);
    const Metadata meta{{"domain", "spectrum"},
                        {"N", std::to_string(spectrum.size())},
                        {"M", std::to_string(opt.factor)},
                        {"source_N", std::to_string(source.sequence.size())},
                        {"grid_spacing", format_double(spectrum.grid_spacing())}};
    detail::OutputFile out(opt.out, "--out", io.out);
    write_spectrum(spectrum, out.get(), meta);
}

struct KernelsOptions {
    std::size_t n = 8;
    std::vector<std::size_t> ls = default_truncations();
    std::string grid;
    std::string out = "-";
};

inline void run_kernels(const KernelsOptions& opt, detail::Streams io)
{
    const OmegaGrid grid = [&] {
        if (opt.grid.empty()) {
            return OmegaGrid::symmetric();
        }
        try {
            return OmegaGrid::parse(opt.grid);
        } catch (const std::domain_error& e) {
            throw FlagError("--grid", e.what());
        }
    }();
    const auto rows = kernel_discrepancy(opt.n, opt.ls, grid);
    const Metadata meta{{"N", std::to_string(opt.n)}, {"L", detail::join(opt.ls)}, {"grid", grid.descriptor()}};
    detail::OutputFile out(opt.out, "--out", io.out);
    write_table(to_table(rows), kernel_table_columns(), out.get(), meta);
}

struct CompareOptions {
    std::string a;
    std::string b;
};

inline void run_compare(const CompareOptions& opt, detail::Streams io)
{
    const SequenceFile a = detail::load(opt.a, "--a", io.in);
    const SequenceFile b = detail::load(opt.b, "--b", io.in);
    if (a.sequence.size() != b.sequence.size()) {
        throw FlagError("--b", "length " + std::to_string(b.sequence.size()) + " differs from --a length " +
                                   std::to_string(a.sequence.size()));
    }
    io.out << format_report(compare_sequences(a.sequence, b.sequence)) << '\n';
}

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::size_t factor = 2;
    std::size_t reps = 5;
    std::string out = "-";
};

inline void run_bench(const BenchOptions& opt, detail::Streams io)
{
    const auto rows = bench_methods(opt.sizes, opt.factor, opt.reps);
    const Metadata meta{{"M", std::to_string(opt.factor)}, {"reps", std::to_string(opt.reps)}};
    detail::OutputFile out(opt.out, "--out", io.out);
    write_table(to_table(rows), bench_table_columns(), out.get(), meta);
}

/// Runs one invocation. args excludes the program name. Returns the exit status.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fast signal interpolation by zero-padding and FFT", "zpinterp"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a test signal");
    gen_cmd->add_option("--kind", gen.kind, "tone | multitone | bandlimited-random | gaussian-pulse")->required();
    gen_cmd->add_option("--n", gen.n, "Number of samples")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen.seed, "Seed for bandlimited-random");
    gen_cmd->add_option("--harmonics", gen.harmonics, "Harmonic indices of the N-sample frame")->delimiter(',');
    gen_cmd->add_option("--amplitudes", gen.amplitudes, "Real amplitude per harmonic")->delimiter(',');
    gen_cmd->add_option("--center", gen.center, "Pulse center in samples (default N/2)");
    gen_cmd->add_option("--width", gen.width, "Pulse standard deviation in samples")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--band", gen.band, "Highest |harmonic| for bandlimited-random");
    gen_cmd->add_flag("--bandlimited", gen.bandlimited, "Reject harmonics above (N-1)/2");
    gen_cmd->add_option("--ts", gen.ts, "Sample period in seconds")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", gen.out, "Output file, - for stdout");

    UpsampleOptions up;
    auto* up_cmd = app.add_subcommand("upsample", "Interpolate a sequence by an integer factor");
    up_cmd->add_option("--in", up.in, "Input sequence file, - for stdin")->required();
    up_cmd->add_option("--factor", up.factor, "Upsampling factor M")->required()->check(CLI::PositiveNumber);
    up_cmd->add_option("--method", up.method, "fft | dirichlet | sinc");
    up_cmd->add_option("--out", up.out, "Output file, - for stdout");

    SpectrumOptions sp;
    auto* sp_cmd = app.add_subcommand("spectrum", "Zero-padded spectrum of a sequence");
    sp_cmd->add_option("--in", sp.in, "Input sequence file, - for stdin")->required();
    sp_cmd->add_option("--factor", sp.factor, "Zero-padding factor M")->check(CLI::PositiveNumber);
    sp_cmd->add_option("--out", sp.out, "Output file, - for stdout");

    KernelsOptions ker;
    auto* ker_cmd = app.add_subcommand("kernels", "Dirichlet vs periodized-sinc discrepancy table");
    ker_cmd->add_option("--n", ker.n, "Dirichlet order N")->check(CLI::PositiveNumber);
    ker_cmd->add_option("--l", ker.ls, "Truncations L, comma separated")->delimiter(',');
    ker_cmd->add_option("--grid", ker.grid, "START:STOP:COUNT (default -pi:pi:1024)");
    ker_cmd->add_option("--out", ker.out, "Output file, - for stdout");

    CompareOptions cmp;
    auto* cmp_cmd = app.add_subcommand("compare", "Error report between two sequence files");
    cmp_cmd->add_option("--a", cmp.a, "First sequence file")->required();
    cmp_cmd->add_option("--b", cmp.b, "Second sequence file")->required();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time every interpolation method");
    bench_cmd->add_option("--sizes", bench.sizes, "Input lengths N, comma separated")->required()->delimiter(',');
    bench_cmd->add_option("--factor", bench.factor, "Upsampling factor M")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--reps", bench.reps, "Timed repetitions (>= 3)")->check(CLI::Range(3, 1000000));
    bench_cmd->add_option("--out", bench.out, "Output file, - for stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "zpinterp: error: " << e.what() << '\n';
        return 2;
    }

    const detail::Streams io{in, out};
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (*gen_cmd) {
            run_gen(gen, io);
        } else if (*up_cmd) {
            run_upsample(up, io);
        } else if (*sp_cmd) {
            run_spectrum(sp, io);
        } else if (*ker_cmd) {
            run_kernels(ker, io);
        } else if (*cmp_cmd) {
            run_compare(cmp, io);
        } else if (*bench_cmd) {
            run_bench(bench, io);
        }
    } catch (const std::exception& e) {
        err << "zpinterp " << name << ": error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace zpinterp::cli
