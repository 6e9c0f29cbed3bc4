#include "softnum/mesh_io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <streambuf>

#include "softnum/error.hpp"
#include "softnum/text.hpp"

namespace softnum::io {

using geometry::Mesh;
using geometry::MeshVertex;

std::string_view toString(MeshFormat format) noexcept { return format == MeshFormat::Csv ? "csv" : "obj"; }

std::optional<MeshFormat> parseFormat(std::string_view name) noexcept {
    if (name == "csv") return MeshFormat::Csv;
    if (name == "obj") return MeshFormat::Obj;
    return std::nullopt;
}

namespace {

std::string num(double v) { return formatReal(v, kRoundTripDigits); }

}  // namespace

void writeCsv(const Mesh& mesh, std::ostream& out) {
    out << kCsvHeader << '\n';
    std::string row;
    for (const auto& v : mesh.vertices()) {
        row.clear();
        row += std::to_string(v.i);
        row += ',';
        row += std::to_string(v.j);
        for (double value : {v.phi, v.A, v.B, v.x, v.y, v.X, v.Y, v.Z, v.color}) {
            row += ',';
            row += num(value);
        }
        row += '\n';
        out << row;
    }
}

std::array<double, 3> jetColor(double code) noexcept {
    auto channel = [code](double k) { return std::clamp(1.5 - std::abs(4.0 * code - k), 0.0, 1.0); };
    return {channel(3.0), channel(2.0), channel(1.0)};
}

void writeObj(const Mesh& mesh, std::ostream& out) {
    const auto res = mesh.resolution();
    out << "# soft number mesh surface=" << geometry::toString(mesh.surface()) << " R=" << num(mesh.radius())
        << " res=" << res.nPhi << 'x' << res.nB << '\n';
    std::string line;
    for (const auto& v : mesh.vertices()) {
        const auto rgb = jetColor(v.color);
        line = "v " + num(v.X) + ' ' + num(v.Y) + ' ' + num(v.Z);
        for (double c : rgb) {
            line += ' ';
            line += formatReal(c);
        }
        line += '\n';
        out << line;
    }
    for (const auto& tri : mesh.triangles()) {
        out << "f " << tri[0] + 1 << ' ' << tri[1] + 1 << ' ' << tri[2] + 1 << '\n';
    }
}

std::vector<MeshVertex> readCsv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(0, "missing CSV header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw ParseError(0, "CSV header does not match '" + std::string(kCsvHeader) + "'");

    std::vector<MeshVertex> rows;
    std::size_t lineNo = 1;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<std::string_view, 11> fields;
        std::size_t count = 0;
        std::string_view rest = line;
        for (;;) {
            const auto comma = rest.find(',');
            if (count == fields.size()) throw ParseError(lineNo, "too many CSV fields on line");
            fields[count++] = rest.substr(0, comma);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (count != fields.size()) throw ParseError(lineNo, "too few CSV fields on line");

        auto parseField = [&](std::string_view field, auto& target) {
            auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), target);
            if (ec != std::errc{} || end != field.data() + field.size()) {
                throw ParseError(lineNo, "malformed CSV value '" + std::string(field) + "' on line");
            }
        };
        MeshVertex v;
        parseField(fields[0], v.i);
        parseField(fields[1], v.j);
        double* targets[] = {&v.phi, &v.A, &v.B, &v.x, &v.y, &v.X, &v.Y, &v.Z, &v.color};
        for (std::size_t k = 0; k < 9; ++k) parseField(fields[k + 2], *targets[k]);
        rows.push_back(v);
    }
    return rows;
}

// --------------------------------------------------------------------------
// SHA-256
// --------------------------------------------------------------------------

struct Sha256::State {
    EVP_MD_CTX* ctx = nullptr;
};

Sha256::Sha256() : state_(new State{EVP_MD_CTX_new()}) {
    if (state_->ctx == nullptr || EVP_DigestInit_ex(state_->ctx, EVP_sha256(), nullptr) != 1) {
        EVP_MD_CTX_free(state_->ctx);
        delete state_;
        throw Error(ErrorCode::IoError, "cannot initialise SHA-256");
    }
}

Sha256::~Sha256() {
    EVP_MD_CTX_free(state_->ctx);
    delete state_;
}

void Sha256::update(std::string_view bytes) {
    if (EVP_DigestUpdate(state_->ctx, bytes.data(), bytes.size()) != 1) {
        throw Error(ErrorCode::IoError, "SHA-256 update failed");
    }
}

std::string Sha256::hexDigest() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_DigestFinal_ex(state_->ctx, digest, &length) != 1) throw Error(ErrorCode::IoError, "SHA-256 final failed");
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int k = 0; k < length; ++k) {
        out += kHex[digest[k] >> 4];
        out += kHex[digest[k] & 0x0f];
    }
    return out;
}

std::string Sha256::of(std::string_view bytes) {
    Sha256 hash;
    hash.update(bytes);
    return hash.hexDigest();
}

namespace {

/// Forwards every byte to `sink` and into the running hash.
class HashingStreamBuf : public std::streambuf {
public:
    HashingStreamBuf(std::streambuf* sink, Sha256& hash) : sink_(sink), hash_(hash) {
        setp(buffer_.data(), buffer_.data() + buffer_.size());
    }

    ~HashingStreamBuf() override { flushBuffer(); }

protected:
    int_type overflow(int_type ch) override {
        if (!flushBuffer()) return traits_type::eof();
        if (!traits_type::eq_int_type(ch, traits_type::eof())) {
            *pptr() = traits_type::to_char_type(ch);
            pbump(1);
        }
        return traits_type::not_eof(ch);
    }

    int sync() override { return flushBuffer() && sink_->pubsync() == 0 ? 0 : -1; }

private:
    bool flushBuffer() {
        const auto pending = static_cast<std::streamsize>(pptr() - pbase());
        if (pending == 0) return true;
        hash_.update(std::string_view(pbase(), static_cast<std::size_t>(pending)));
        const bool ok = sink_->sputn(pbase(), pending) == pending;
        setp(buffer_.data(), buffer_.data() + buffer_.size());
        return ok;
    }

    std::streambuf* sink_;
    Sha256& hash_;
    std::array<char, 1 << 16> buffer_{};
};

}  // namespace

std::string manifestJson(const MeshFileManifest& m) {
    nlohmann::ordered_json j;
    j["surface"] = geometry::toString(m.surface);
    j["R"] = m.R;
    j["resolution"] = {m.resolution.nPhi, m.resolution.nB};
    j["vertexCount"] = m.vertexCount;
    j["format"] = toString(m.format);
    j["checksum"] = m.checksum;
    return j.dump(2) + "\n";
}

MeshFileManifest parseManifestJson(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        MeshFileManifest m;
        const auto surface = geometry::parseSurface(j.at("surface").get<std::string>());
        const auto format = parseFormat(j.at("format").get<std::string>());
        if (!surface || !format) throw ParseError(0, "manifest names an unknown surface or format");
        m.surface = *surface;
        m.format = *format;
        m.R = j.at("R").get<double>();
        m.resolution = {j.at("resolution").at(0).get<std::size_t>(), j.at("resolution").at(1).get<std::size_t>()};
        m.vertexCount = j.at("vertexCount").get<std::size_t>();
        m.checksum = j.at("checksum").get<std::string>();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("invalid manifest: ") + e.what());
    }
}

std::filesystem::path manifestPathFor(const std::filesystem::path& out) {
    return std::filesystem::path(out.string() + ".manifest.json");
}

MeshFileManifest exportMesh(const Mesh& mesh, MeshFormat format, const std::filesystem::path& out) {
    MeshFileManifest manifest;
    manifest.surface = mesh.surface();
    manifest.R = mesh.radius();
    manifest.resolution = mesh.resolution();
    manifest.vertexCount = mesh.vertices().size();
    manifest.format = format;

    {
        std::ofstream file(out, std::ios::binary | std::ios::trunc);
        if (!file) throw Error(ErrorCode::IoError, "cannot open '" + out.string() + "' for writing");
        Sha256 hash;
        {
            HashingStreamBuf tee(file.rdbuf(), hash);
            std::ostream stream(&tee);
            if (format == MeshFormat::Csv) {
                writeCsv(mesh, stream);
            } else {
                writeObj(mesh, stream);
            }
            stream.flush();
            if (!stream) throw Error(ErrorCode::IoError, "write to '" + out.string() + "' failed");
        }
        file.close();
        if (!file) throw Error(ErrorCode::IoError, "closing '" + out.string() + "' failed");
        manifest.checksum = hash.hexDigest();
    }

    const auto manifestPath = manifestPathFor(out);
    std::ofstream sidecar(manifestPath, std::ios::binary | std::ios::trunc);
    if (!sidecar) throw Error(ErrorCode::IoError, "cannot open '" + manifestPath.string() + "' for writing");
    sidecar << manifestJson(manifest);
    sidecar.close();
    if (!sidecar) throw Error(ErrorCode::IoError, "writing '" + manifestPath.string() + "' failed");
    return manifest;
}

}  // namespace softnum::io
