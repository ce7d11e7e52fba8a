#include "dfscan/report.hpp"

#include <algorithm>
#include <fstream>

#include <openssl/evp.h>

#include <json.hpp>

namespace dfscan {

using nlohmann::json;

std::string sha256_hex(ByteView data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hexd = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += hexd[digest[i] >> 4];
        out += hexd[digest[i] & 15];
    }
    return out;
}

std::string corpus_content_hash(const std::vector<CorpusItem>& items) {
    // Hash of per-file hashes, sorted: stable under enumeration order.
    std::vector<std::string> file_hashes;
    for (const auto& item : items) {
        std::ifstream in(item.file, std::ios::binary);
        if (!in) continue;
        Bytes content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        file_hashes.push_back(sha256_hex(ByteView(content)));
    }
    std::sort(file_hashes.begin(), file_hashes.end());
    std::string all;
    for (const auto& h : file_hashes) all += h;
    return sha256_hex(as_bytes(all));
}

std::vector<std::pair<std::string, double>> lineage_series(const CorpusReport& report) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& [_, bins] : report.packages())
        for (const auto& [path, b] : bins)
            if (auto r = library_origin_ratio(b)) out.emplace_back(path, *r);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

namespace {

std::string fmax_text(const FMax& f) {
    switch (f.kind) {
        case FMax::none: return "N/A";
        case FMax::multiple: return "M/F";
        case FMax::name: return f.function;
    }
    return "N/A";
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

class Writer {
public:
    Writer(const ScanConfig& config) : config_(config) {}

    void emit(const std::string& stem, const json& doc,
              const std::vector<std::string>& csv_header,
              const std::vector<std::vector<std::string>>& csv_rows) {
        if (config_.format != OutputFormat::csv) {
            auto p = config_.output_dir / (stem + ".json");
            std::ofstream out(p, std::ios::binary);
            if (!out) throw Error("cannot write " + p.string());
            out << doc.dump(2) << "\n";
            written_.push_back(p);
        }
        if (config_.format != OutputFormat::json) {
            auto p = config_.output_dir / (stem + ".csv");
            std::ofstream out(p, std::ios::binary);
            if (!out) throw Error("cannot write " + p.string());
            for (std::size_t i = 0; i < csv_header.size(); ++i)
                out << (i ? "," : "") << csv_header[i];
            out << "\n";
            for (const auto& row : csv_rows) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << csv_quote(row[i]);
                out << "\n";
            }
            written_.push_back(p);
        }
    }

    std::vector<std::filesystem::path> take() { return std::move(written_); }

private:
    const ScanConfig& config_;
    std::vector<std::filesystem::path> written_;
};

std::string num(double v) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::vector<std::filesystem::path> write_reports(const CorpusReport& report,
                                                 const ScanConfig& config,
                                                 const WarningList& warnings,
                                                 const std::string& corpus_hash) {
    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw Error("cannot create output dir: " + config.output_dir.string());

    Writer w(config);
    std::size_t k = static_cast<std::size_t>(std::max(config.top_k, 1));

    {
        double ratio = report.package_binary_ratio();
        json doc = {{"dataset", "table2_package_ratio"},
                    {"n_packages", report.n_packages()},
                    {"ratio", ratio}};
        w.emit("table2_package_ratio", doc, {"n_packages", "ratio"},
               {{std::to_string(report.n_packages()), num(ratio)}});
    }
    {
        double ratio = report.binary_target_ratio();
        json doc = {{"dataset", "fig4_binary_ratio"},
                    {"n_binaries", report.n_binaries()},
                    {"ratio", ratio}};
        w.emit("fig4_binary_ratio", doc, {"n_binaries", "ratio"},
               {{std::to_string(report.n_binaries()), num(ratio)}});
    }
    {
        auto series = report.isa_ratio_series();
        json rows = json::array();
        std::vector<std::vector<std::string>> csv;
        for (const auto& t : series) {
            rows.push_back({{"binary", t.binary_path},
                            {"sse", t.sse},
                            {"avx", t.avx},
                            {"other", t.other}});
            csv.push_back({t.binary_path, num(t.sse), num(t.avx), num(t.other)});
        }
        w.emit("fig5_isa_series", json{{"dataset", "fig5_isa_series"}, {"series", rows}},
               {"binary", "ratio_sse", "ratio_avx", "ratio_other"}, csv);
    }
    {
        auto table = report.mnemonic_table(k, config.table3_per_binary_mean);
        json rows = json::array();
        std::vector<std::vector<std::string>> csv;
        for (const auto& [mn, pct] : table) {
            rows.push_back({{"mnemonic", mn}, {"percent", pct}});
            csv.push_back({mn, num(pct)});
        }
        w.emit("table3_mnemonics", json{{"dataset", "table3_mnemonics"}, {"rows", rows}},
               {"mnemonic", "percent"}, csv);
    }
    {
        auto series = lineage_series(report);
        json rows = json::array();
        std::vector<std::vector<std::string>> csv;
        for (const auto& [path, ratio] : series) {
            rows.push_back({{"binary", path}, {"library_ratio", ratio}});
            csv.push_back({path, num(ratio)});
        }
        w.emit("fig6_lineage_series", json{{"dataset", "fig6_lineage_series"}, {"series", rows}},
               {"binary", "library_ratio"}, csv);
    }
    {
        auto share = report.library_share(k);
        json rows = json::array();
        std::vector<std::vector<std::string>> csv;
        for (const auto& [path, pct] : share) {
            rows.push_back({{"library_path", path}, {"percent", pct}});
            csv.push_back({path, num(pct)});
        }
        w.emit("fig7_library_share", json{{"dataset", "fig7_library_share"}, {"rows", rows}},
               {"library_path", "percent"}, csv);
    }
    {
        json rows = json::array();
        std::vector<std::vector<std::string>> csv;
        for (const auto& [pkg, _] : report.packages()) {
            PackageReport pr = report.package_detail(pkg);
            rows.push_back({{"package", pr.package},
                            {"n_binaries", pr.n_binaries},
                            {"n_target", pr.n_target},
                            {"n_files_with_hits", pr.n_binaries_with_hits},
                            {"f_max", fmax_text(pr.f_max)}});
            csv.push_back({pr.package, std::to_string(pr.n_binaries),
                           std::to_string(pr.n_target), std::to_string(pr.n_binaries_with_hits),
                           fmax_text(pr.f_max)});
        }
        w.emit("table4_package_detail",
               json{{"dataset", "table4_package_detail"}, {"rows", rows}},
               {"package", "n_binaries", "N_T", "N_F", "F_MAX"}, csv);
    }
    {
        json warn = json::array();
        for (const auto& wn : warnings) warn.push_back({{"context", wn.context},
                                                        {"message", wn.message}});
        json doc = {{"tool_version", kToolVersion},
                    {"corpus_root", config.corpus_root.string()},
                    {"corpus_sha256", corpus_hash},
                    {"isa_mode", config.isa_mode == IsaMode::encoding ? "encoding" : "extension"},
                    {"top_k", config.top_k},
                    {"jobs", config.jobs},
                    {"n_packages", report.n_packages()},
                    {"n_binaries", report.n_binaries()},
                    {"n_target_total", report.n_target_total()},
                    {"warnings", warn}};
        auto p = config.output_dir / "manifest.json";
        std::ofstream out(p, std::ios::binary);
        if (!out) throw Error("cannot write " + p.string());
        out << doc.dump(2) << "\n";
    }
    return w.take();
}

}  // namespace dfscan
