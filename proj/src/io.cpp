#include "detrep/io.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace detrep {

namespace {

struct LineReader {
    std::vector<std::vector<std::string>> lines;
    std::size_t pos = 0;

    explicit LineReader(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            std::vector<std::string> toks;
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) {
                if (tok[0] == '#') break; // comment to end of line
                toks.push_back(tok);
            }
            if (!toks.empty()) lines.push_back(std::move(toks));
        }
    }

    bool done() const { return pos >= lines.size(); }
    const std::vector<std::string>& next() {
        if (done()) throw ParseError("unexpected end of file");
        return lines[pos++];
    }
};

std::size_t parse_size(const std::string& tok) {
    try {
        std::size_t idx = 0;
        const unsigned long long v = std::stoull(tok, &idx);
        if (idx != tok.size()) throw ParseError("bad integer: " + tok);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError("bad integer: " + tok);
    }
}

FileHeader parse_header_lines(LineReader& lr) {
    FileHeader h;
    const auto& magic = lr.next();
    if (magic.size() != 2 || magic[0] != "detrep") throw ParseError("missing 'detrep <version>' line");
    h.version = static_cast<int>(parse_size(magic[1]));
    if (h.version != 1) throw ParseError("unsupported format version");

    const auto& field = lr.next();
    if (field.size() != 2 || field[0] != "field") throw ParseError("missing 'field' line");
    if (field[1] == "q") {
        h.field = FieldTag::Rationals;
    } else if (field[1].rfind("p:", 0) == 0) {
        h.field = FieldTag::Prime;
        h.prime = parse_size(field[1].substr(2));
    } else {
        throw ParseError("field must be 'q' or 'p:<prime>'");
    }

    const auto& rline = lr.next();
    if (rline.size() != 2 || rline[0] != "r") throw ParseError("missing 'r' line");
    h.r = parse_size(rline[1]);
    const auto& gline = lr.next();
    if (gline.size() != 2 || gline[0] != "g") throw ParseError("missing 'g' line");
    h.g = parse_size(gline[1]);

    if (h.field == FieldTag::Prime && h.prime <= h.r + 1)
        throw ParseError("prime-field modulus must exceed r+1");
    return h;
}

template <class K>
std::vector<K> parse_scalar_row(const std::vector<std::string>& toks, std::size_t expect,
                                std::size_t from = 0) {
    if (toks.size() - from != expect) throw ParseError("wrong number of scalars on line");
    std::vector<K> row;
    row.reserve(expect);
    for (std::size_t i = from; i < toks.size(); ++i) row.push_back(ScalarIO<K>::parse(toks[i]));
    return row;
}

template <class K>
UniPoly<K> parse_unipoly_line(const std::vector<std::string>& toks, std::size_t from = 0) {
    std::vector<K> c;
    c.reserve(toks.size() - from);
    for (std::size_t i = from; i < toks.size(); ++i) c.push_back(ScalarIO<K>::parse(toks[i]));
    if (c.empty()) throw ParseError("empty polynomial line");
    return UniPoly<K>(std::move(c));
}

template <class K>
std::string unipoly_line(const UniPoly<K>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) s += ' ';
        s += ScalarIO<K>::print(p.coeffs()[i]);
    }
    return s;
}

template <class K>
std::string scalar_row_line(const std::vector<K>& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += ' ';
        s += ScalarIO<K>::print(row[i]);
    }
    return s;
}

template <class K>
Matrix<K> parse_scalar_block(LineReader& lr, std::size_t rows, std::size_t cols) {
    Matrix<K> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto row = parse_scalar_row<K>(lr.next(), cols);
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
    }
    return m;
}

} // namespace

FileHeader parse_header_text(const std::string& text) {
    LineReader lr(text);
    return parse_header_lines(lr);
}

template <class K>
Instance<K> parse_instance(const std::string& text) {
    LineReader lr(text);
    Instance<K> inst;
    inst.header = parse_header_lines(lr);
    if (inst.header.field != ScalarIO<K>::tag)
        throw ParseError("file field tag does not match the requested coefficient field");
    const std::size_t n = inst.header.r + 1;
    const std::size_t g = inst.header.g;

    while (!lr.done()) {
        const auto head = lr.next();
        const std::string& kind = head[0];
        if (head.size() < 2) throw ParseError("object line without a name");
        const std::string& name = head[1];

        if (kind == "matrix") {
            if (head.size() != 4) throw ParseError("matrix line needs rows and cols");
            const std::size_t rows = parse_size(head[2]), cols = parse_size(head[3]);
            inst.objects.emplace_back(name, parse_scalar_block<K>(lr, rows, cols));
        } else if (kind == "linform-matrix") {
            LinFormMatrix<K> m(n, g);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m.at(i, j) = LinearForm<K>(parse_scalar_row<K>(lr.next(), g));
            inst.objects.emplace_back(name, std::move(m));
        } else if (kind == "multipoly") {
            if (head.size() != 4) throw ParseError("multipoly line needs nvars and nterms");
            const std::size_t nvars = parse_size(head[2]), nterms = parse_size(head[3]);
            MultiPoly<K> p(nvars);
            for (std::size_t t = 0; t < nterms; ++t) {
                const auto& toks = lr.next();
                if (toks.size() != nvars + 1) throw ParseError("bad term line");
                Exponents e(nvars);
                for (std::size_t i = 0; i < nvars; ++i)
                    e[i] = static_cast<unsigned>(parse_size(toks[i + 1]));
                p.add_term(e, ScalarIO<K>::parse(toks[0]));
            }
            inst.objects.emplace_back(name, std::move(p));
        } else if (kind == "unipoly") {
            inst.objects.emplace_back(name, parse_unipoly_line<K>(lr.next()));
        } else if (kind == "unipoly-matrix") {
            if (head.size() != 4) throw ParseError("unipoly-matrix line needs rows and cols");
            const std::size_t rows = parse_size(head[2]), cols = parse_size(head[3]);
            Matrix<UniPoly<K>> m(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m(i, j) = parse_unipoly_line<K>(lr.next());
            inst.objects.emplace_back(name, std::move(m));
        } else if (kind == "curve") {
            std::vector<UniPoly<K>> coords;
            for (std::size_t i = 0; i < g; ++i) coords.push_back(parse_unipoly_line<K>(lr.next()));
            try {
                inst.objects.emplace_back(name, ParamCurve<K>(std::move(coords)));
            } catch (const PreconditionError& e) {
                throw ParseError(std::string("bad curve: ") + e.what());
            }
        } else if (kind == "points") {
            if (head.size() != 3) throw ParseError("points line needs a count");
            const std::size_t count = parse_size(head[2]);
            std::vector<std::vector<K>> pts;
            for (std::size_t i = 0; i < count; ++i)
                pts.push_back(parse_scalar_row<K>(lr.next(), g));
            try {
                inst.objects.emplace_back(name, PointCloudCurve<K>(std::move(pts)));
            } catch (const PreconditionError& e) {
                throw ParseError(std::string("bad point cloud: ") + e.what());
            }
        } else if (kind == "tensor") {
            PetriTensor<K> t(inst.header.r, g);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const auto row = parse_scalar_row<K>(lr.next(), g);
                    for (std::size_t k = 0; k < g; ++k) t.at(i, j, k) = row[k];
                }
            inst.objects.emplace_back(name, std::move(t));
        } else if (kind == "certificate") {
            EquivalenceCertificate<K> cert;
            const auto& tline = lr.next();
            if (tline.size() != 2 || tline[0] != "transposed")
                throw ParseError("certificate needs a 'transposed' line");
            cert.transposed = parse_size(tline[1]) != 0;
            const auto& cline = lr.next();
            if (cline.size() != 2 || cline[0] != "c") throw ParseError("certificate needs a 'c' line");
            cert.c = ScalarIO<K>::parse(cline[1]);
            const auto& smark = lr.next();
            if (smark.size() != 1 || smark[0] != "S") throw ParseError("certificate needs an 'S' block");
            cert.s = parse_scalar_block<K>(lr, n, n);
            const auto& tmark = lr.next();
            if (tmark.size() != 1 || tmark[0] != "T") throw ParseError("certificate needs a 'T' block");
            cert.t = parse_scalar_block<K>(lr, n, n);
            inst.objects.emplace_back(name, std::move(cert));
        } else if (kind == "tag") {
            if (head.size() < 3) throw ParseError("tag line needs a value");
            std::string value = head[2];
            for (std::size_t i = 3; i < head.size(); ++i) value += " " + head[i];
            inst.objects.emplace_back(name, TagObject<K>{std::move(value)});
        } else {
            throw ParseError("unknown object kind: " + kind);
        }
    }
    return inst;
}

namespace {

template <class K>
struct ObjectSerializer {
    std::string& out;
    const std::string& name;
    const FileHeader& header;

    void line(const std::string& s) const { out += s + "\n"; }

    void operator()(const Matrix<K>& m) const {
        line("matrix " + name + " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i) line(scalar_row_line(m.row(i)));
    }
    void operator()(const LinFormMatrix<K>& m) const {
        line("linform-matrix " + name);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                line(scalar_row_line(m.at(i, j).coeff));
    }
    void operator()(const MultiPoly<K>& p) const {
        line("multipoly " + name + " " + std::to_string(p.nvars()) + " " +
             std::to_string(p.term_count()));
        for (const auto& [e, c] : p.terms()) {
            std::string s = ScalarIO<K>::print(c);
            for (unsigned x : e) s += " " + std::to_string(x);
            line(s);
        }
    }
    void operator()(const UniPoly<K>& p) const {
        line("unipoly " + name);
        line(unipoly_line(p));
    }
    void operator()(const Matrix<UniPoly<K>>& m) const {
        line("unipoly-matrix " + name + " " + std::to_string(m.rows()) + " " +
             std::to_string(m.cols()));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                line(unipoly_line(m(i, j)));
    }
    void operator()(const ParamCurve<K>& c) const {
        line("curve " + name);
        for (const auto& f : c.coords()) line(unipoly_line(f));
    }
    void operator()(const PointCloudCurve<K>& pc) const {
        line("points " + name + " " + std::to_string(pc.points().size()));
        for (const auto& p : pc.points()) line(scalar_row_line(p));
    }
    void operator()(const PetriTensor<K>& t) const {
        line("tensor " + name);
        for (std::size_t i = 0; i <= t.r; ++i)
            for (std::size_t j = 0; j <= t.r; ++j) {
                std::string s;
                for (std::size_t k = 0; k < t.g; ++k) {
                    if (k) s += ' ';
                    s += ScalarIO<K>::print(t.at(i, j, k));
                }
                line(s);
            }
    }
    void operator()(const EquivalenceCertificate<K>& cert) const {
        line("certificate " + name);
        line(std::string("transposed ") + (cert.transposed ? "1" : "0"));
        line("c " + ScalarIO<K>::print(cert.c));
        line("S");
        for (std::size_t i = 0; i < cert.s.rows(); ++i) line(scalar_row_line(cert.s.row(i)));
        line("T");
        for (std::size_t i = 0; i < cert.t.rows(); ++i) line(scalar_row_line(cert.t.row(i)));
    }
    void operator()(const TagObject<K>& t) const { line("tag " + name + " " + t.value); }
};

} // namespace

template <class K>
std::string serialize_instance(const Instance<K>& inst) {
    std::string out;
    out += "detrep " + std::to_string(inst.header.version) + "\n";
    if (inst.header.field == FieldTag::Rationals)
        out += "field q\n";
    else
        out += "field p:" + std::to_string(inst.header.prime) + "\n";
    out += "r " + std::to_string(inst.header.r) + "\n";
    out += "g " + std::to_string(inst.header.g) + "\n";
    for (const auto& [name, obj] : inst.objects)
        std::visit(ObjectSerializer<K>{out, name, inst.header}, obj);
    return out;
}

template Instance<Rat> parse_instance<Rat>(const std::string&);
template Instance<Fp> parse_instance<Fp>(const std::string&);
template std::string serialize_instance<Rat>(const Instance<Rat>&);
template std::string serialize_instance<Fp>(const Instance<Fp>&);

} // namespace detrep
