#include <vendokit/file_io.hpp>

#include <vendokit/error.hpp>

#include <fstream>
#include <iterator>
#include <system_error>

namespace vendokit {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw Error(Errc::NotFound, "no such file: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(Errc::Io, "cannot open " + path.string());
    }
    std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (in.bad()) {
        throw Error(Errc::Io, "read failed: " + path.string());
    }
    return bytes;
}

void write_file(const fs::path& path, std::string_view bytes) {
    auto tmp = path;
    tmp += ".vendokit-tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(Errc::Io, "cannot write " + tmp.string());
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw Error(Errc::Io, "write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(Errc::Io, "cannot replace " + path.string());
    }
}

}  // namespace vendokit
