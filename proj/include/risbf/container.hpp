#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "risbf/tensor.hpp"

namespace risbf {

// Little-endian binary file helpers shared by the dataset and checkpoint
// containers. Layout common to both:
//   bytes 0..7   magic (ASCII, container kind)
//   bytes 8..11  u32 version
//   bytes 12..15 u32 reserved (0)
//   u64 json_len, json bytes
//   ... kind-specific payload ...
// All integers little-endian, all floats IEEE-754 binary64.

class BinWriter {
public:
    explicit BinWriter(const std::string& path) : path_(path) {
        f_ = std::fopen(path.c_str(), "wb");
        if (!f_) throw std::runtime_error("cannot open for writing: " + path);
    }
    ~BinWriter() {
        if (f_) std::fclose(f_);
    }
    BinWriter(const BinWriter&) = delete;
    BinWriter& operator=(const BinWriter&) = delete;

    void bytes(const void* p, std::size_t n) {
        if (std::fwrite(p, 1, n, f_) != n) throw std::runtime_error("short write: " + path_);
    }
    void u32(std::uint32_t v) { bytes(&v, 4); }
    void u64(std::uint64_t v) { bytes(&v, 8); }
    void f64(double v) { bytes(&v, 8); }
    void f64s(const double* p, std::size_t n) { bytes(p, n * 8); }
    void str(const std::string& s) {
        u64(s.size());
        bytes(s.data(), s.size());
    }
    void close() {
        if (f_) {
            if (std::fclose(f_) != 0) throw std::runtime_error("close failed: " + path_);
            f_ = nullptr;
        }
    }

private:
    std::FILE* f_ = nullptr;
    std::string path_;
};

class BinReader {
public:
    explicit BinReader(const std::string& path) : path_(path) {
        f_ = std::fopen(path.c_str(), "rb");
        if (!f_) throw std::runtime_error("cannot open for reading: " + path);
    }
    ~BinReader() {
        if (f_) std::fclose(f_);
    }
    BinReader(const BinReader&) = delete;
    BinReader& operator=(const BinReader&) = delete;

    void bytes(void* p, std::size_t n) {
        if (std::fread(p, 1, n, f_) != n)
            throw std::runtime_error("truncated file: " + path_);
    }
    std::uint32_t u32() {
        std::uint32_t v;
        bytes(&v, 4);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v;
        bytes(&v, 8);
        return v;
    }
    double f64() {
        double v;
        bytes(&v, 8);
        return v;
    }
    void f64s(double* p, std::size_t n) { bytes(p, n * 8); }
    std::string str() {
        std::uint64_t n = u64();
        if (n > (1ULL << 32)) throw std::runtime_error("corrupt string length: " + path_);
        std::string s(n, '\0');
        bytes(s.data(), n);
        return s;
    }
    bool at_eof() {
        int c = std::fgetc(f_);
        if (c == EOF) return true;
        std::ungetc(c, f_);
        return false;
    }

private:
    std::FILE* f_ = nullptr;
    std::string path_;
};

inline void write_header(BinWriter& w, const char magic[8], std::uint32_t version) {
    w.bytes(magic, 8);
    w.u32(version);
    w.u32(0);
}

inline std::uint32_t read_header(BinReader& r, const char magic[8], const char* what) {
    char m[8];
    r.bytes(m, 8);
    if (std::memcmp(m, magic, 8) != 0)
        throw std::runtime_error(std::string("bad magic, not a ") + what + " file");
    std::uint32_t version = r.u32();
    r.u32();  // reserved
    return version;
}

inline void write_tensor(BinWriter& w, const std::string& name, const Tensor& t) {
    w.str(name);
    w.u32(static_cast<std::uint32_t>(t.rank()));
    for (auto d : t.shape) w.u64(d);
    w.f64s(t.data.data(), t.size());
}

inline std::pair<std::string, Tensor> read_tensor(BinReader& r) {
    std::string name = r.str();
    std::uint32_t rank = r.u32();
    if (rank > 8) throw std::runtime_error("corrupt tensor rank");
    Shape s(rank);
    for (auto& d : s) d = r.u64();
    Tensor t(s);
    r.f64s(t.data.data(), t.size());
    return {std::move(name), std::move(t)};
}

// Write to "<path>.partial" then rename, so interrupted runs never leave a
// file that parses.
template <typename Fn>
void atomic_write(const std::string& path, Fn&& fill) {
    std::string tmp = path + ".partial";
    {
        BinWriter w(tmp);
        fill(w);
        w.close();
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace risbf
