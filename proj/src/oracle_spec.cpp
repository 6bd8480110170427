#include "bqlab/oracle_spec.hpp"

#include "bqlab/errors.hpp"

#include <fstream>
#include <sstream>

namespace bqlab {

CountedOracle OracleSpec::build() const {
    switch (kind) {
        case Kind::table: return table_oracle(truth_table);
        case Kind::chain: return chain_oracle(MonotoneChain::with_leading_ones(chain_length, chain_ones));
        case Kind::dimacs: return sat_oracle(universe);
        case Kind::innerproduct: return inner_product_oracle(*inner_product);
    }
    throw ContractError("unhandled oracle spec kind");
}

OracleSpec parse_oracle_spec(std::string_view text, const std::filesystem::path& base_dir) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;

        std::istringstream ls(line);
        std::string keyword;
        ls >> keyword;
        OracleSpec spec;

        if (keyword == "table") {
            std::string bits;
            if (!(ls >> bits)) throw ParseError(line_no, "table needs a bitstring");
            spec.kind = OracleSpec::Kind::table;
            spec.truth_table = bits;
            spec.instance_label = "table-" + bits;
            const std::size_t n = bits.size();
            if (n < 2 || (n & (n - 1)) != 0) {
                throw ParseError(line_no, "table length must be a power of two (>= 2)");
            }
            for (char c : bits) {
                if (c != '0' && c != '1') throw ParseError(line_no, "table must be 0/1 only");
            }
        } else if (keyword == "chain") {
            if (!(ls >> spec.chain_length >> spec.chain_ones)) {
                throw ParseError(line_no, "chain needs <L> <ones-count>");
            }
            if (spec.chain_length < 1 || spec.chain_ones < 0 ||
                spec.chain_ones > spec.chain_length) {
                throw ParseError(line_no, "chain needs 0 <= ones <= L, L >= 1");
            }
            spec.kind = OracleSpec::Kind::chain;
            spec.instance_label = "chain-L" + std::to_string(spec.chain_length) + "-ones" +
                                  std::to_string(spec.chain_ones);
        } else if (keyword == "dimacs") {
            spec.kind = OracleSpec::Kind::dimacs;
            std::string path;
            int count = 0;
            while (ls >> path) {
                std::filesystem::path p(path);
                if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
                std::ifstream f(p);
                if (!f) throw ParseError(line_no, "cannot open CNF file '" + path + "'");
                std::stringstream buf;
                buf << f.rdbuf();
                try {
                    spec.universe.push_back(parse_dimacs(buf.str()));
                } catch (const ParseError& e) {
                    throw ParseError(line_no, "in '" + path + "': " + e.what());
                }
                ++count;
            }
            if (count == 0) throw ParseError(line_no, "dimacs needs at least one path");
            spec.instance_label = "dimacs-" + std::to_string(count) + "formulas";
        } else if (keyword == "innerproduct") {
            int mz = 0, n = 0;
            if (!(ls >> mz >> n)) throw ParseError(line_no, "innerproduct needs <m_z> <n>");
            if (mz < 1 || n < 1 || mz + n > 32) {
                throw ParseError(line_no, "innerproduct widths out of range");
            }
            std::vector<std::uint64_t> outputs;
            std::string word;
            while (ls >> word) {
                if (static_cast<int>(word.size()) != n) {
                    throw ParseError(line_no, "output '" + word + "' is not " +
                                                  std::to_string(n) + " bits");
                }
                try {
                    outputs.push_back(from_bitstring(word));
                } catch (const ContractError&) {
                    throw ParseError(line_no, "output '" + word + "' must be 0/1 only");
                }
            }
            if (outputs.size() != (std::uint64_t{1} << mz)) {
                throw ParseError(line_no, "innerproduct needs exactly 2^m_z outputs");
            }
            spec.kind = OracleSpec::Kind::innerproduct;
            spec.inner_product = InnerProductOracleSpec(mz, n, std::move(outputs));
            spec.instance_label = "innerproduct-mz" + std::to_string(mz) + "-n" +
                                  std::to_string(n);
        } else {
            throw ParseError(line_no, "unknown oracle kind '" + keyword + "'");
        }
        return spec;
    }
    throw ParseError(line_no, "empty oracle spec");
}

OracleSpec load_oracle_spec(const std::filesystem::path& file) {
    std::ifstream f(file);
    if (!f) throw ParseError(0, "cannot open oracle spec '" + file.string() + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_oracle_spec(buf.str(), file.parent_path());
}

} // namespace bqlab
