#include "fim/module.hpp"

#include "fim/functors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fim {

std::string to_string(Status s) {
    switch (s) {
        case Status::Exact: return "EXACT";
        case Status::WindowBounded: return "WINDOW_BOUNDED";
        case Status::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

ObjectIndex Presentation::generator_bound(int m) const {
    ObjectIndex b = ObjectIndex::zero(m);
    for (const auto& n : generator_slots) b = componentwise_max(b, n);
    return b;
}

// ---------------------------------------------------------------------------

TruncatedModule::TruncatedModule(Window window, GroupPtr group, std::vector<std::size_t> dims)
    : window_(std::move(window)), group_(group ? std::move(group) : GroupTable::trivial()), dims_(std::move(dims)) {
    if (dims_.size() != window_.size()) throw std::invalid_argument("one dimension per window object required");
    const std::size_t gens = group_->generators().size();
    incl_.resize(window_.size());
    swaps_.resize(window_.size());
    group_actions_.resize(window_.size());
    for (std::size_t idx = 0; idx < window_.size(); ++idx) {
        const ObjectIndex n = window_.object(idx);
        const std::size_t d = dims_[idx];
        for (int i = 0; i < m(); ++i) {
            auto t = window_.find(n + ObjectIndex::unit(m(), i));
            incl_[idx].push_back(t ? Matrix(dims_[*t], d) : Matrix());
            std::vector<Matrix> sw;
            for (int k = 0; k + 1 < n[i]; ++k) sw.emplace_back(d, d);
            swaps_[idx].push_back(std::move(sw));
        }
        for (std::size_t j = 0; j < gens; ++j) group_actions_[idx].emplace_back(d, d);
    }
}

std::size_t TruncatedModule::total_dim() const {
    std::size_t t = 0;
    for (auto d : dims_) t += d;
    return t;
}

const Matrix& TruncatedModule::inclusion(const ObjectIndex& n, int i) const {
    if (!window_.contains(n + ObjectIndex::unit(m(), i)))
        throw std::out_of_range("inclusion leaves the window at " + to_string(n));
    return incl_[window_.index(n)][static_cast<std::size_t>(i)];
}

const Matrix& TruncatedModule::swap(const ObjectIndex& n, int i, int k) const {
    return swaps_[window_.index(n)][static_cast<std::size_t>(i)].at(static_cast<std::size_t>(k));
}

const Matrix& TruncatedModule::group_action(const ObjectIndex& n, int j) const {
    return group_actions_[window_.index(n)].at(static_cast<std::size_t>(j));
}

namespace {
void check_shape(const Matrix& slot, const Matrix& a) {
    if (slot.rows() != a.rows() || slot.cols() != a.cols())
        throw std::invalid_argument("action matrix has shape " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + ", expected " + std::to_string(slot.rows()) + "x" +
                                    std::to_string(slot.cols()));
}
}  // namespace

void TruncatedModule::set_inclusion(const ObjectIndex& n, int i, Matrix a) {
    if (!window_.contains(n + ObjectIndex::unit(m(), i)))
        throw std::out_of_range("inclusion leaves the window at " + to_string(n));
    auto& slot = incl_[window_.index(n)][static_cast<std::size_t>(i)];
    check_shape(slot, a);
    slot = std::move(a);
}

void TruncatedModule::set_swap(const ObjectIndex& n, int i, int k, Matrix a) {
    auto& slot = swaps_[window_.index(n)][static_cast<std::size_t>(i)].at(static_cast<std::size_t>(k));
    check_shape(slot, a);
    slot = std::move(a);
}

void TruncatedModule::set_group_action(const ObjectIndex& n, int j, Matrix a) {
    auto& slot = group_actions_[window_.index(n)].at(static_cast<std::size_t>(j));
    check_shape(slot, a);
    slot = std::move(a);
}

const Matrix& TruncatedModule::generator_matrix(const Generator& g) const {
    switch (g.kind) {
        case Generator::Kind::Inclusion: return inclusion(g.at, g.coord);
        case Generator::Kind::Swap: return swap(g.at, g.coord, g.k);
        case Generator::Kind::Group: return group_action(g.at, g.group_gen);
    }
    throw std::logic_error("unknown generator kind");
}

void TruncatedModule::set_generator_matrix(const Generator& g, Matrix a) {
    switch (g.kind) {
        case Generator::Kind::Inclusion: set_inclusion(g.at, g.coord, std::move(a)); return;
        case Generator::Kind::Swap: set_swap(g.at, g.coord, g.k, std::move(a)); return;
        case Generator::Kind::Group: set_group_action(g.at, g.group_gen, std::move(a)); return;
    }
}

Matrix TruncatedModule::group_element_action(const ObjectIndex& n, int element) const {
    Matrix r = Matrix::identity(dim(n));
    for (int j : group_->word(element)) r = r * group_action(n, j);
    return r;
}

Matrix TruncatedModule::automorphism_action(const ObjectIndex& n, const std::vector<Injection>& perms,
                                            int group_element) const {
    Matrix r = group_element_action(n, group_element);
    for (int i = 0; i < m(); ++i) {
        Injection p = perms.at(static_cast<std::size_t>(i));
        // p = s_{k_r} ... s_{k_1} with k_1 found first.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t k = 0; k + 1 < p.size(); ++k)
                if (p[k] > p[k + 1]) {
                    std::swap(p[k], p[k + 1]);
                    r = swap(n, i, static_cast<int>(k)) * r;
                    changed = true;
                }
        }
    }
    return r;
}

Matrix TruncatedModule::standard_map(const ObjectIndex& n, const ObjectIndex& t) const {
    if (!leq(n, t)) throw std::invalid_argument("standard_map: " + to_string(n) + " is not <= " + to_string(t));
    Matrix r = Matrix::identity(dim(n));
    ObjectIndex cur = n;
    for (int i = 0; i < m(); ++i)
        while (cur[i] < t[i]) {
            r = inclusion(cur, i) * r;
            cur = cur + ObjectIndex::unit(m(), i);
        }
    return r;
}

Matrix TruncatedModule::action(const Morphism& f) const {
    if (!is_valid(f)) throw std::invalid_argument("action: invalid morphism");
    Matrix r = standard_map(f.source, f.target) * group_element_action(f.source, f.group_element);
    std::vector<Injection> sigma;
    for (int i = 0; i < m(); ++i) {
        const int a = f.source[i], b = f.target[i], d = b - a;
        const auto& alpha = f.maps[static_cast<std::size_t>(i)];
        Injection s(static_cast<std::size_t>(b), -1);
        std::vector<bool> used(static_cast<std::size_t>(b), false);
        for (int x = 0; x < a; ++x) {
            s[static_cast<std::size_t>(x + d)] = alpha[static_cast<std::size_t>(x)];
            used[static_cast<std::size_t>(alpha[static_cast<std::size_t>(x)])] = true;
        }
        int next = 0;
        for (int x = 0; x < d; ++x) {
            while (used[static_cast<std::size_t>(next)]) ++next;
            s[static_cast<std::size_t>(x)] = next++;
        }
        sigma.push_back(std::move(s));
    }
    return automorphism_action(f.target, sigma, 0) * r;
}

bool operator==(const TruncatedModule& a, const TruncatedModule& b) {
    return a.window_ == b.window_ && *a.group_ == *b.group_ && a.dims_ == b.dims_ && a.incl_ == b.incl_ &&
           a.swaps_ == b.swaps_ && a.group_actions_ == b.group_actions_ && a.presentation_ == b.presentation_;
}

ModulePtr share(TruncatedModule v) { return std::make_shared<const TruncatedModule>(std::move(v)); }

// ---------------------------------------------------------------------------

namespace {

void check_compatible(const TruncatedModule& a, const TruncatedModule& b) {
    if (!(a.window() == b.window())) throw std::invalid_argument("modules live on different windows");
    if (!(a.group() == b.group())) throw std::invalid_argument("modules have different groups");
}

}  // namespace

ModuleMap identity_map(const ModulePtr& v) {
    ModuleMap f{v, v, {}};
    for (auto d : v->dims()) f.blocks.push_back(Matrix::identity(d));
    return f;
}

ModuleMap zero_map(const ModulePtr& source, const ModulePtr& target) {
    check_compatible(*source, *target);
    ModuleMap f{source, target, {}};
    for (std::size_t idx = 0; idx < source->window().size(); ++idx)
        f.blocks.emplace_back(target->dim_at(idx), source->dim_at(idx));
    return f;
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    check_compatible(*f.source, *g.target);
    if (f.source->dims() != g.target->dims()) throw std::invalid_argument("compose: middle modules differ");
    ModuleMap h{g.source, f.target, {}};
    for (std::size_t idx = 0; idx < f.blocks.size(); ++idx) h.blocks.push_back(f.blocks[idx] * g.blocks[idx]);
    return h;
}

ModuleMap operator+(const ModuleMap& f, const ModuleMap& g) {
    ModuleMap h = f;
    for (std::size_t idx = 0; idx < h.blocks.size(); ++idx) h.blocks[idx] += g.blocks.at(idx);
    return h;
}

ModuleMap scale(const ModuleMap& f, const Rational& c) {
    ModuleMap h = f;
    for (auto& b : h.blocks) b *= c;
    return h;
}

std::optional<std::string> naturality_failure(const ModuleMap& f) {
    const auto& v = *f.source;
    const auto& w = *f.target;
    if (!(v.window() == w.window())) return "source and target windows differ";
    if (!(v.group() == w.group())) return "source and target groups differ";
    for (std::size_t idx = 0; idx < v.window().size(); ++idx) {
        const auto& b = f.blocks[idx];
        if (b.rows() != w.dim_at(idx) || b.cols() != v.dim_at(idx))
            return "block shape mismatch at " + to_string(v.window().object(idx));
    }
    for (const auto& g : generators(v.window(), v.group())) {
        const auto t = to_morphism(g, v.group()).target;
        if (w.generator_matrix(g) * f.at(g.at) != f.at(t) * v.generator_matrix(g))
            return "naturality fails for a generator at " + to_string(g.at);
    }
    return std::nullopt;
}

bool is_natural(const ModuleMap& f) { return !naturality_failure(f).has_value(); }

bool is_blockwise_injective(const ModuleMap& f) {
    for (const auto& b : f.blocks)
        if (rank(b) != b.cols()) return false;
    return true;
}

bool is_blockwise_surjective(const ModuleMap& f) {
    for (const auto& b : f.blocks)
        if (rank(b) != b.rows()) return false;
    return true;
}

bool is_isomorphism(const ModuleMap& f) {
    for (const auto& b : f.blocks)
        if (b.rows() != b.cols() || rank(b) != b.cols()) return false;
    return is_natural(f);
}

ModuleMap inverse(const ModuleMap& f) {
    ModuleMap g{f.target, f.source, {}};
    for (const auto& b : f.blocks) {
        if (b.rows() != b.cols()) throw std::invalid_argument("inverse: block is not square");
        auto x = solve(b, Matrix::identity(b.rows()));
        if (!x) throw std::invalid_argument("inverse: singular block");
        g.blocks.push_back(std::move(*x));
    }
    return g;
}

// ---------------------------------------------------------------------------

SubspaceFamily zero_family(const TruncatedModule& v) {
    SubspaceFamily f;
    for (auto d : v.dims()) f.emplace_back(d);
    return f;
}

SubspaceFamily full_family(const TruncatedModule& v) {
    SubspaceFamily f;
    for (auto d : v.dims()) f.push_back(Subspace::full(d));
    return f;
}

SubspaceFamily kernel_family(const ModuleMap& f) {
    SubspaceFamily out;
    for (const auto& b : f.blocks) out.push_back(kernel_basis(b));
    return out;
}

SubspaceFamily image_family(const ModuleMap& f) {
    SubspaceFamily out;
    for (const auto& b : f.blocks) out.push_back(image_basis(b));
    return out;
}

SubspaceFamily intersect(const SubspaceFamily& a, const SubspaceFamily& b) {
    SubspaceFamily out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i].intersect(b.at(i)));
    return out;
}

SubspaceFamily sum(const SubspaceFamily& a, const SubspaceFamily& b) {
    SubspaceFamily out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i].sum(b.at(i)));
    return out;
}

std::size_t total_dim(const SubspaceFamily& family) {
    std::size_t t = 0;
    for (const auto& s : family) t += s.dim();
    return t;
}

bool is_action_closed(const TruncatedModule& v, const SubspaceFamily& family) {
    for (const auto& g : generators(v.window(), v.group())) {
        const auto t = to_morphism(g, v.group()).target;
        const auto& src = family[v.window().index(g.at)];
        const auto& dst = family[v.window().index(t)];
        const Matrix image = v.generator_matrix(g) * src.columns();
        for (std::size_t c = 0; c < image.cols(); ++c)
            if (!dst.contains(image.column(c))) return false;
    }
    return true;
}

SubspaceFamily closure(const TruncatedModule& v, const SubspaceFamily& family) {
    const Window& w = v.window();
    SubspaceFamily out(w.size());
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
        const ObjectIndex n = w.object(idx);
        SpanBuilder span(v.dim_at(idx));
        std::deque<Vector> queue;
        auto offer = [&](const Vector& x) {
            if (span.add(x)) queue.push_back(x);
        };
        const auto& given = family[idx].basis();
        for (std::size_t r = 0; r < given.rows(); ++r) offer(given.row(r));
        for (int i = 0; i < v.m(); ++i) {
            if (n[i] == 0) continue;
            const ObjectIndex below = n - ObjectIndex::unit(v.m(), i);
            const Matrix image = v.inclusion(below, i) * out[w.index(below)].columns();
            for (std::size_t c = 0; c < image.cols(); ++c) offer(image.column(c));
        }
        while (!queue.empty()) {
            Vector x = std::move(queue.front());
            queue.pop_front();
            for (int i = 0; i < v.m(); ++i)
                for (int k = 0; k + 1 < n[i]; ++k) offer(v.swap(n, i, k).apply(x));
            for (std::size_t j = 0; j < v.group().generators().size(); ++j)
                offer(v.group_action(n, static_cast<int>(j)).apply(x));
        }
        out[idx] = span.subspace();
    }
    return out;
}

SubmoduleResult submodule(const ModulePtr& v, const SubspaceFamily& closed) {
    if (!is_action_closed(*v, closed)) throw std::invalid_argument("submodule: family is not action-closed");
    const Window& w = v->window();
    std::vector<std::size_t> dims;
    for (const auto& s : closed) dims.push_back(s.dim());
    TruncatedModule sub(w, v->group_ptr(), dims);
    for (const auto& g : generators(w, v->group())) {
        const auto t = to_morphism(g, v->group()).target;
        const auto& src = closed[w.index(g.at)];
        const auto& dst = closed[w.index(t)];
        sub.set_generator_matrix(g, dst.coordinate_map() * (v->generator_matrix(g) * src.columns()));
    }
    auto module = share(std::move(sub));
    ModuleMap incl{module, v, {}};
    for (const auto& s : closed) incl.blocks.push_back(s.columns());
    return {module, std::move(incl)};
}

SubmoduleResult submodule_generated(const ModulePtr& v, const SubspaceFamily& generators) {
    return submodule(v, closure(*v, generators));
}

Matrix QuotientResult::section_at(const ObjectIndex& n) const {
    return sections.at(projection.source->window().index(n));
}

QuotientResult quotient(const ModulePtr& v, const SubspaceFamily& closed) {
    if (!is_action_closed(*v, closed)) throw std::invalid_argument("quotient: family is not action-closed");
    const Window& w = v->window();
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps, sections;
    for (std::size_t idx = 0; idx < w.size(); ++idx) {
        dims.push_back(v->dim_at(idx) - closed[idx].dim());
        maps.push_back(quotient_map(v->dim_at(idx), closed[idx]));
        sections.push_back(quotient_section(v->dim_at(idx), closed[idx]));
    }
    TruncatedModule q(w, v->group_ptr(), dims);
    for (const auto& g : generators(w, v->group())) {
        const auto t = to_morphism(g, v->group()).target;
        q.set_generator_matrix(g, maps[w.index(t)] * (v->generator_matrix(g) * sections[w.index(g.at)]));
    }
    auto module = share(std::move(q));
    QuotientResult r{module, ModuleMap{v, module, std::move(maps)}, std::move(sections)};
    return r;
}

QuotientResult cokernel(const ModuleMap& f) { return quotient(f.target, image_family(f)); }

// ---------------------------------------------------------------------------

TruncatedModule make_zero(const Window& window, const GroupPtr& group) {
    return TruncatedModule(window, group, std::vector<std::size_t>(window.size(), 0));
}

Matrix regular_matrix(const GroupTable& group, int element) {
    const auto n = static_cast<std::size_t>(group.order());
    Matrix r(n, n);
    for (int h = 0; h < group.order(); ++h) r(static_cast<std::size_t>(group.multiply(element, h)), static_cast<std::size_t>(h)) = 1;
    return r;
}

TruncatedModule make_free(const ObjectIndex& n, const Window& window, const GroupPtr& group) {
    if (!window.contains(n)) throw std::invalid_argument("make_free: " + to_string(n) + " outside the window");
    const auto order = static_cast<std::size_t>(group->order());
    std::vector<std::size_t> dims;
    for (const auto& t : window.objects()) dims.push_back(leq(n, t) ? count_injections(n, t) * order : 0);
    TruncatedModule v(window, group, dims);
    for (const auto& g : generators(window, *group)) {
        if (!leq(n, g.at)) continue;
        const Morphism gamma = to_morphism(g, *group);
        Matrix a(v.dim(gamma.target), v.dim(g.at));
        const auto basis = enumerate_injections(n, g.at);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::size_t image = morphism_rank(compose(gamma, basis[b], *group));
            for (std::size_t h = 0; h < order; ++h) {
                const auto hh = g.kind == Generator::Kind::Group
                                    ? static_cast<std::size_t>(group->multiply(gamma.group_element, static_cast<int>(h)))
                                    : h;
                a(image * order + hh, b * order + h) = 1;
            }
        }
        v.set_generator_matrix(g, std::move(a));
    }
    v.set_presentation(Presentation{{n}, std::nullopt});
    return v;
}

TruncatedModule make_point(const Window& window, const GroupPtr& group) {
    std::vector<std::size_t> dims(window.size(), 0);
    dims[0] = 1;
    TruncatedModule v(window, group, dims);
    const ObjectIndex zero = ObjectIndex::zero(window.m());
    for (std::size_t j = 0; j < group->generators().size(); ++j)
        v.set_group_action(zero, static_cast<int>(j), Matrix::identity(1));
    std::vector<int> ones(static_cast<std::size_t>(window.m()), 1);
    v.set_presentation(Presentation{{zero}, ObjectIndex(ones)});
    return v;
}

namespace {

Matrix group_rep_matrix(const GroupTable& group, int generator_element, GroupRep rep) {
    if (rep == GroupRep::Trivial) return Matrix::identity(1);
    return regular_matrix(group, generator_element);
}

std::size_t group_rep_dim(const GroupTable& group, GroupRep rep) {
    return rep == GroupRep::Trivial ? 1 : static_cast<std::size_t>(group.order());
}

/// Outer product of Specht matrices: one matrix per generator of automorphisms(sizes).
std::vector<Matrix> outer_specht(const std::vector<Partition>& lambdas, std::size_t& dim) {
    std::vector<SpechtRep> reps;
    for (const auto& l : lambdas) reps.push_back(specht(l));
    dim = 1;
    for (const auto& r : reps) dim *= r.dim;
    std::vector<Matrix> out;
    for (std::size_t q = 0; q < reps.size(); ++q)
        for (const auto& gen : reps[q].generators) {
            Matrix a = Matrix::identity(1);
            for (std::size_t p = 0; p < reps.size(); ++p) a = kron(a, p == q ? gen : Matrix::identity(reps[p].dim));
            out.push_back(std::move(a));
        }
    return out;
}

ObjectIndex sizes_of(const std::vector<Partition>& lambdas) {
    std::vector<int> n;
    for (const auto& l : lambdas) n.push_back(l.size());
    return ObjectIndex(n);
}

/// Puts the group `group` on V (trivial group) through the chosen representation.
TruncatedModule attach_group(const TruncatedModule& v, const GroupPtr& group, GroupRep rep) {
    if (rep == GroupRep::Regular) return ind(v, group);
    TruncatedModule out(v.window(), group, v.dims());
    for (const auto& g : generators(v.window(), *group)) {
        if (g.kind == Generator::Kind::Group)
            out.set_generator_matrix(g, Matrix::identity(v.dim(g.at)));
        else
            out.set_generator_matrix(g, v.generator_matrix(g));
    }
    out.set_presentation(v.presentation());
    return out;
}

}  // namespace

TruncatedModule make_induced(const std::vector<Partition>& lambdas, const Window& window, const GroupPtr& group,
                             GroupRep rep) {
    const ObjectIndex n = sizes_of(lambdas);
    if (n.m() != window.m()) throw std::invalid_argument("make_induced: one partition per coordinate required");
    if (!window.contains(n)) throw std::invalid_argument("make_induced: " + to_string(n) + " outside the window");
    std::size_t sdim = 0;
    const auto aut_gens = outer_specht(lambdas, sdim);
    const GroupPtr aut = GroupTable::automorphisms(n);
    const GroupPtr r = GroupTable::product(*aut, *group);
    const std::size_t gdim = group_rep_dim(*group, rep);
    TruncatedModule w(Window(ObjectIndex()), r, {sdim * gdim});
    const ObjectIndex point;
    int j = 0;
    for (const auto& a : aut_gens) w.set_group_action(point, j++, kron(a, Matrix::identity(gdim)));
    for (int g : group->generators())
        w.set_group_action(point, j++, kron(Matrix::identity(sdim), group_rep_matrix(*group, g, rep)));
    w.set_presentation(Presentation{{point}, std::nullopt});
    return induced_module(n, all_coords(window.m()), w, group, window.bound());
}

TruncatedModule make_cofree(const ObjectIndex& l, const Window& window, const GroupPtr& group) {
    if (!window.contains(l)) throw std::invalid_argument("make_cofree: " + to_string(l) + " outside the window");
    const auto order = static_cast<std::size_t>(group->order());
    std::vector<std::size_t> dims;
    for (const auto& t : window.objects()) dims.push_back(leq(t, l) ? count_injections(t, l) * order : 0);
    TruncatedModule v(window, group, dims);
    for (const auto& g : generators(window, *group)) {
        const Morphism gamma = to_morphism(g, *group);
        if (!leq(gamma.target, l)) continue;
        Matrix a(v.dim(gamma.target), v.dim(g.at));
        const auto targets = enumerate_injections(gamma.target, l);
        for (std::size_t b = 0; b < targets.size(); ++b) {
            Morphism pulled = compose(targets[b], gamma, *group);
            pulled.group_element = 0;
            const std::size_t col = morphism_rank(pulled);
            for (std::size_t h = 0; h < order; ++h) {
                const auto hh = g.kind == Generator::Kind::Group
                                    ? static_cast<std::size_t>(group->multiply(gamma.group_element, static_cast<int>(h)))
                                    : h;
                a(b * order + hh, col * order + h) = 1;
            }
        }
        v.set_generator_matrix(g, std::move(a));
    }
    std::vector<int> ones(static_cast<std::size_t>(window.m()), 1);
    v.set_presentation(Presentation{{l}, l + ObjectIndex(ones)});
    return v;
}

TruncatedModule make_coinduced(const std::vector<Partition>& lambdas, const Window& window, const GroupPtr& group,
                               GroupRep rep) {
    const ObjectIndex l = sizes_of(lambdas);
    if (l.m() != window.m()) throw std::invalid_argument("make_coinduced: one partition per coordinate required");
    const TruncatedModule e = make_cofree(l, window, GroupTable::trivial());
    std::size_t sdim = 0;
    const auto gens = outer_specht(lambdas, sdim);
    const GroupPtr aut = GroupTable::automorphisms(l);
    const auto rho = element_matrices(*aut, gens, sdim);

    // Invariants of tau: delta_beta -> delta_{tau beta} tensored with rho(tau).
    std::vector<Subspace> invariants;
    for (const auto& n : window.objects()) {
        const std::size_t d = e.dim(n);
        if (d == 0) {
            invariants.emplace_back(0);
            continue;
        }
        const auto basis = enumerate_injections(n, l);
        Matrix avg(d * sdim, d * sdim);
        for (int tau = 0; tau < aut->order(); ++tau) {
            const auto perms = automorphism_element(l, tau);
            Matrix p(d, d);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                Morphism moved = basis[b];
                for (int i = 0; i < l.m(); ++i)
                    moved.maps[static_cast<std::size_t>(i)] = compose(perms[static_cast<std::size_t>(i)], moved.maps[static_cast<std::size_t>(i)]);
                p(morphism_rank(moved), b) = 1;
            }
            avg += kron(p, rho[static_cast<std::size_t>(tau)]);
        }
        invariants.push_back(image_basis(avg));
    }
    std::vector<std::size_t> dims;
    for (const auto& s : invariants) dims.push_back(s.dim());
    TruncatedModule v(window, GroupTable::trivial(), dims);
    for (const auto& g : generators(window, *GroupTable::trivial())) {
        const auto t = to_morphism(g, *GroupTable::trivial()).target;
        const auto& src = invariants[window.index(g.at)];
        const auto& dst = invariants[window.index(t)];
        const Matrix a = kron(e.generator_matrix(g), Matrix::identity(sdim));
        v.set_generator_matrix(g, dst.coordinate_map() * (a * src.columns()));
    }
    std::vector<int> ones(static_cast<std::size_t>(window.m()), 1);
    v.set_presentation(Presentation{{l}, l + ObjectIndex(ones)});
    return attach_group(v, group, rep);
}

// ---------------------------------------------------------------------------

TruncatedModule external_tensor(const TruncatedModule& v, const TruncatedModule& w, const std::vector<int>& v_coords) {
    const int m = v.m() + w.m();
    if (static_cast<int>(v_coords.size()) != v.m()) throw std::invalid_argument("external_tensor: placement size");
    std::vector<int> owner(static_cast<std::size_t>(m), -1);  // position in v, or -(position in w) - 2
    for (int p = 0; p < v.m(); ++p) {
        const int c = v_coords[static_cast<std::size_t>(p)];
        if (c < 0 || c >= m || owner[static_cast<std::size_t>(c)] != -1)
            throw std::invalid_argument("external_tensor: overlapping or invalid coordinates");
        owner[static_cast<std::size_t>(c)] = p;
    }
    std::vector<int> w_coords;
    for (int c = 0; c < m; ++c)
        if (owner[static_cast<std::size_t>(c)] == -1) {
            owner[static_cast<std::size_t>(c)] = -static_cast<int>(w_coords.size()) - 2;
            w_coords.push_back(c);
        }
    const bool v_has_group = !v.group().is_trivial(), w_has_group = !w.group().is_trivial();
    if (v_has_group && w_has_group) throw std::invalid_argument("external_tensor: both factors carry a group");
    const GroupPtr group = v_has_group ? v.group_ptr() : w.group_ptr();

    auto merge = [&](const ObjectIndex& a, const ObjectIndex& b) {
        std::vector<int> c(static_cast<std::size_t>(m));
        for (int p = 0; p < v.m(); ++p) c[static_cast<std::size_t>(v_coords[static_cast<std::size_t>(p)])] = a[p];
        for (std::size_t p = 0; p < w_coords.size(); ++p) c[static_cast<std::size_t>(w_coords[p])] = b[static_cast<int>(p)];
        return ObjectIndex(c);
    };
    const Window window(merge(v.window().bound(), w.window().bound()));
    std::vector<std::size_t> dims;
    for (const auto& n : window.objects()) dims.push_back(v.dim(n.project(v_coords)) * w.dim(n.project(w_coords)));
    TruncatedModule out(window, group, dims);
    for (const auto& g : generators(window, *group)) {
        const ObjectIndex nv = g.at.project(v_coords), nw = g.at.project(w_coords);
        const Matrix iv = Matrix::identity(v.dim(nv)), iw = Matrix::identity(w.dim(nw));
        Matrix a;
        switch (g.kind) {
            case Generator::Kind::Inclusion: {
                const int o = owner[static_cast<std::size_t>(g.coord)];
                a = o >= 0 ? kron(v.inclusion(nv, o), iw) : kron(iv, w.inclusion(nw, -o - 2));
                break;
            }
            case Generator::Kind::Swap: {
                const int o = owner[static_cast<std::size_t>(g.coord)];
                a = o >= 0 ? kron(v.swap(nv, o, g.k), iw) : kron(iv, w.swap(nw, -o - 2, g.k));
                break;
            }
            case Generator::Kind::Group:
                a = v_has_group ? kron(v.group_action(nv, g.group_gen), iw) : kron(iv, w.group_action(nw, g.group_gen));
                break;
        }
        out.set_generator_matrix(g, std::move(a));
    }
    if (v.presentation() && w.presentation()) {
        const auto& pv = *v.presentation();
        const auto& pw = *w.presentation();
        Presentation p;
        for (const auto& a : pv.generator_slots)
            for (const auto& b : pw.generator_slots) p.generator_slots.push_back(merge(a, b));
        if (pv.relation_bound || pw.relation_bound)
            p.relation_bound = merge(pv.relation_bound.value_or(pv.generator_bound(v.m())),
                                     pw.relation_bound.value_or(pw.generator_bound(w.m())));
        out.set_presentation(std::move(p));
    }
    return out;
}

TruncatedModule external_tensor(const TruncatedModule& v, const TruncatedModule& w) {
    std::vector<int> coords(static_cast<std::size_t>(v.m()));
    for (int i = 0; i < v.m(); ++i) coords[static_cast<std::size_t>(i)] = i;
    return external_tensor(v, w, coords);
}

TruncatedModule direct_sum(const TruncatedModule& v, const TruncatedModule& w) {
    check_compatible(v, w);
    std::vector<std::size_t> dims;
    for (std::size_t idx = 0; idx < v.window().size(); ++idx) dims.push_back(v.dim_at(idx) + w.dim_at(idx));
    TruncatedModule out(v.window(), v.group_ptr(), dims);
    for (const auto& g : generators(v.window(), v.group()))
        out.set_generator_matrix(g, block_diagonal(v.generator_matrix(g), w.generator_matrix(g)));
    if (v.presentation() && w.presentation()) {
        Presentation p = *v.presentation();
        const auto& q = *w.presentation();
        p.generator_slots.insert(p.generator_slots.end(), q.generator_slots.begin(), q.generator_slots.end());
        if (p.relation_bound && q.relation_bound)
            p.relation_bound = componentwise_max(*p.relation_bound, *q.relation_bound);
        else if (q.relation_bound)
            p.relation_bound = q.relation_bound;
        out.set_presentation(std::move(p));
    }
    return out;
}

TruncatedModule direct_sum(const std::vector<TruncatedModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
    TruncatedModule acc = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) acc = direct_sum(acc, parts[k]);
    return acc;
}

namespace {
std::size_t summand_offset(const std::vector<ModulePtr>& parts, std::size_t k, std::size_t idx) {
    std::size_t off = 0;
    for (std::size_t p = 0; p < k; ++p) off += parts[p]->dim_at(idx);
    return off;
}
}  // namespace

ModuleMap summand_inclusion(const ModulePtr& sum, const std::vector<ModulePtr>& parts, std::size_t k) {
    ModuleMap f{parts.at(k), sum, {}};
    for (std::size_t idx = 0; idx < sum->window().size(); ++idx) {
        Matrix b(sum->dim_at(idx), parts[k]->dim_at(idx));
        b.set_block(summand_offset(parts, k, idx), 0, Matrix::identity(parts[k]->dim_at(idx)));
        f.blocks.push_back(std::move(b));
    }
    return f;
}

ModuleMap summand_projection(const ModulePtr& sum, const std::vector<ModulePtr>& parts, std::size_t k) {
    ModuleMap f{sum, parts.at(k), {}};
    for (std::size_t idx = 0; idx < sum->window().size(); ++idx) {
        Matrix b(parts[k]->dim_at(idx), sum->dim_at(idx));
        b.set_block(0, summand_offset(parts, k, idx), Matrix::identity(parts[k]->dim_at(idx)));
        f.blocks.push_back(std::move(b));
    }
    return f;
}

TruncatedModule restrict_window(const TruncatedModule& v, const ObjectIndex& bound) {
    if (!leq(bound, v.window().bound())) throw std::invalid_argument("restrict_window: bound exceeds the window");
    const Window window(bound);
    std::vector<std::size_t> dims;
    for (const auto& n : window.objects()) dims.push_back(v.dim(n));
    TruncatedModule out(window, v.group_ptr(), dims);
    for (const auto& g : generators(window, v.group())) out.set_generator_matrix(g, v.generator_matrix(g));
    out.set_presentation(v.presentation());
    return out;
}

// ---------------------------------------------------------------------------

ValidationReport validate(const TruncatedModule& v) {
    const Window& w = v.window();
    const GroupTable& group = v.group();
    const int m = v.m();
    auto fail = [](std::string what) { return ValidationReport{false, std::move(what)}; };
    auto at = [](const ObjectIndex& n) { return " at " + to_string(n); };

    for (const auto& g : generators(w, group)) {
        const auto t = to_morphism(g, group).target;
        const Matrix& a = v.generator_matrix(g);
        if (a.rows() != v.dim(t) || a.cols() != v.dim(g.at)) return fail("shape of a generator matrix" + at(g.at));
    }
    for (const auto& n : w.objects()) {
        const std::size_t d = v.dim(n);
        for (int i = 0; i < m; ++i) {
            std::vector<Matrix> s;
            for (int k = 0; k + 1 < n[i]; ++k) s.push_back(v.swap(n, i, k));
            if (!satisfies_coxeter(s)) return fail("Coxeter relation in coordinate " + std::to_string(i + 1) + at(n));
            for (int j = i + 1; j < m; ++j)
                for (int k = 0; k + 1 < n[i]; ++k)
                    for (int l = 0; l + 1 < n[j]; ++l)
                        if (v.swap(n, i, k) * v.swap(n, j, l) != v.swap(n, j, l) * v.swap(n, i, k))
                            return fail("transpositions of different coordinates commute" + at(n));
        }
        // Group relations via the Cayley graph.
        const auto elems = element_matrices(group, [&] {
            std::vector<Matrix> gm;
            for (std::size_t j = 0; j < group.generators().size(); ++j) gm.push_back(v.group_action(n, static_cast<int>(j)));
            return gm;
        }(), d);
        for (int x = 0; x < group.order(); ++x)
            for (std::size_t j = 0; j < group.generators().size(); ++j) {
                const int y = group.multiply(group.generators()[j], x);
                if (v.group_action(n, static_cast<int>(j)) * elems[static_cast<std::size_t>(x)] != elems[static_cast<std::size_t>(y)])
                    return fail("group relation" + at(n));
            }
        for (std::size_t j = 0; j < group.generators().size(); ++j) {
            const Matrix& gj = v.group_action(n, static_cast<int>(j));
            for (int i = 0; i < m; ++i) {
                for (int k = 0; k + 1 < n[i]; ++k)
                    if (gj * v.swap(n, i, k) != v.swap(n, i, k) * gj) return fail("group commutes with transpositions" + at(n));
                const ObjectIndex up = n + ObjectIndex::unit(m, i);
                if (w.contains(up) && v.inclusion(n, i) * gj != v.group_action(up, static_cast<int>(j)) * v.inclusion(n, i))
                    return fail("group commutes with inclusions" + at(n));
            }
        }
        for (int i = 0; i < m; ++i) {
            const ObjectIndex up = n + ObjectIndex::unit(m, i);
            if (!w.contains(up)) continue;
            const Matrix& inc = v.inclusion(n, i);
            for (int j = 0; j < m; ++j) {
                for (int k = 0; k + 1 < n[j]; ++k) {
                    const int shifted = j == i ? k + 1 : k;
                    if (inc * v.swap(n, j, k) != v.swap(up, j, shifted) * inc)
                        return fail("inclusion in coordinate " + std::to_string(i + 1) +
                                    " transports transposition" + at(n));
                }
                if (j == i) continue;
                const ObjectIndex other = n + ObjectIndex::unit(m, j);
                const ObjectIndex both = up + ObjectIndex::unit(m, j);
                if (!w.contains(both)) continue;
                if (v.inclusion(up, j) * inc != v.inclusion(other, i) * v.inclusion(n, j))
                    return fail("inclusions in coordinates " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " commute" + at(n));
            }
            const ObjectIndex up2 = up + ObjectIndex::unit(m, i);
            if (w.contains(up2)) {
                const Matrix two = v.inclusion(up, i) * inc;
                if (v.swap(up2, i, 0) * two != two) return fail("first transposition fixes double inclusion" + at(n));
            }
        }
    }
    return {};
}

TruncatedModule ind(const TruncatedModule& v, const GroupPtr& group) {
    if (!v.group().is_trivial()) throw std::invalid_argument("ind: module already carries a group");
    const auto order = static_cast<std::size_t>(group->order());
    std::vector<std::size_t> dims;
    for (auto d : v.dims()) dims.push_back(d * order);
    TruncatedModule out(v.window(), group, dims);
    const Matrix ig = Matrix::identity(order);
    for (const auto& g : generators(v.window(), *group)) {
        if (g.kind == Generator::Kind::Group)
            out.set_generator_matrix(g, kron(Matrix::identity(v.dim(g.at)),
                                             regular_matrix(*group, group->generators()[static_cast<std::size_t>(g.group_gen)])));
        else
            out.set_generator_matrix(g, kron(v.generator_matrix(g), ig));
    }
    out.set_presentation(v.presentation());
    return out;
}

TruncatedModule res(const TruncatedModule& v) {
    TruncatedModule out(v.window(), GroupTable::trivial(), v.dims());
    for (const auto& g : generators(v.window(), *GroupTable::trivial())) out.set_generator_matrix(g, v.generator_matrix(g));
    out.set_presentation(v.presentation());
    return out;
}

}  // namespace fim
