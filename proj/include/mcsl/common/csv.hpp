#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcsl {

// Minimal CSV emitter with locale-independent, reproducible formatting.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {
        std::string head;
        for (size_t i = 0; i < columns_.size(); ++i) {
            if (i) head += ',';
            head += columns_[i];
        }
        lines_.push_back(head);
    }

    class Row {
    public:
        explicit Row(CsvWriter& w) : w_(w) {}
        Row& operator<<(double v) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.10g", v);
            add(buf);
            return *this;
        }
        Row& operator<<(int v) { return *this << static_cast<long long>(v); }
        Row& operator<<(unsigned v) { return *this << static_cast<long long>(v); }
        Row& operator<<(long long v) {
            add(std::to_string(v));
            return *this;
        }
        Row& operator<<(unsigned long v) {
            add(std::to_string(v));
            return *this;
        }
        Row& operator<<(unsigned long long v) {
            add(std::to_string(v));
            return *this;
        }
        Row& operator<<(const std::string& s) {
            add(s);
            return *this;
        }
        Row& operator<<(const char* s) {
            add(s);
            return *this;
        }
        ~Row() { w_.lines_.push_back(cells_); }

    private:
        void add(const std::string& cell) {
            if (!cells_.empty()) cells_ += ',';
            cells_ += cell;
        }
        CsvWriter& w_;
        std::string cells_;
    };

    Row row() { return Row(*this); }

    std::string str() const {
        std::string out;
        for (const auto& l : lines_) {
            out += l;
            out += '\n';
        }
        return out;
    }

    size_t row_count() const { return lines_.size() - 1; }

    void write_file(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open for write: " + path);
        f << str();
    }

private:
    std::vector<std::string> columns_;
    std::vector<std::string> lines_;
};

}  // namespace mcsl
