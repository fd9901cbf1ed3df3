#include "qlaem/io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace qlaem::io {

namespace {

void put_u32(std::string& buf, std::uint32_t v) {
    for (int b = 0; b < 4; ++b) buf.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_f64(std::string& buf, double x) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    for (int b = 0; b < 8; ++b) buf.push_back(static_cast<char>((bits >> (8 * b)) & 0xff));
}

std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int b = 3; b >= 0; --b) v = (v << 8) | p[b];
    return v;
}

double get_f64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int b = 7; b >= 0; --b) v = (v << 8) | p[b];
    return std::bit_cast<double>(v);
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const Lattice2D& g) {
    std::string buf;
    const std::size_t n = g.site_count();
    buf.reserve(8 + 12 + n * kSnapshotComponents * 16);
    buf.append(kSnapshotMagic, sizeof(kSnapshotMagic));
    put_u32(buf, static_cast<std::uint32_t>(g.nx()));
    put_u32(buf, static_cast<std::uint32_t>(g.ny()));
    put_u32(buf, kSnapshotComponents);
    for (std::size_t k = 0; k < n; ++k) {
        for (int c = 0; c < 4; ++c) {
            const cplx v = g.component(c)[k];
            put_f64(buf, v.real());
            put_f64(buf, v.imag());
        }
    }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("write_snapshot: cannot open " + path.string());
    }
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) {
        throw std::runtime_error("write_snapshot: short write to " + path.string());
    }
}

Lattice2D read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("read_snapshot: cannot open " + path.string());
    }
    std::vector<unsigned char> buf((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());

    if (buf.size() < 20 || std::memcmp(buf.data(), kSnapshotMagic, 8) != 0) {
        throw std::runtime_error("read_snapshot: " + path.string() +
                                 " is not a QLAFLD01 snapshot");
    }
    const std::uint32_t nx = get_u32(buf.data() + 8);
    const std::uint32_t ny = get_u32(buf.data() + 12);
    const std::uint32_t ncomp = get_u32(buf.data() + 16);
    if (ncomp != kSnapshotComponents) {
        throw std::runtime_error("read_snapshot: unsupported component count " +
                                 std::to_string(ncomp));
    }
    const std::size_t n = static_cast<std::size_t>(nx) * ny;
    const std::size_t expect = 20 + n * kSnapshotComponents * 16;
    if (buf.size() != expect) {
        throw std::runtime_error("read_snapshot: payload size mismatch in " + path.string());
    }

    // Snapshots carry no spacing; geometry other than the site grid is the
    // caller's context.  Use unit spacing.
    Lattice2D g(static_cast<int>(nx), static_cast<int>(ny), 1.0);
    const unsigned char* p = buf.data() + 20;
    for (std::size_t k = 0; k < n; ++k) {
        for (int c = 0; c < 4; ++c) {
            const double re = get_f64(p);
            const double im = get_f64(p + 8);
            g.component(c)[k] = cplx{re, im};
            p += 16;
        }
    }
    return g;
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

DiagnosticsWriter::DiagnosticsWriter(const std::filesystem::path& path,
                                     const std::string& canonical_command, bool with_oracle)
    : out_(path, std::ios::trunc), with_oracle_(with_oracle) {
    if (!out_) {
        throw std::runtime_error("DiagnosticsWriter: cannot open " + path.string());
    }
    out_ << "# " << canonical_command << "\n";
    out_ << "step,time,norm_sq,energy,gauss_algebraic,gauss_differential";
    if (with_oracle_) out_ << ",oracle_max_abs_err";
    out_ << "\n";
}

void DiagnosticsWriter::write(const DiagnosticsRow& row) {
    out_ << row.step << ',' << format_double(row.time) << ',' << format_double(row.norm_sq)
         << ',' << format_double(row.energy) << ',' << format_double(row.gauss_algebraic) << ','
         << format_double(row.gauss_differential);
    if (with_oracle_) {
        out_ << ',' << format_double(row.oracle_max_err.value_or(0.0));
    }
    out_ << "\n";
    if (!out_) {
        throw std::runtime_error("DiagnosticsWriter: write failed");
    }
}

}  // namespace qlaem::io
