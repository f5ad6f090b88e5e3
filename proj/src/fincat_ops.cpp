#include "ct/fincat_ops.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ct {

SiftedReport is_sifted(const CatPtr& cp) {
  const FinCat& c = *cp;
  SiftedReport rep;
  if (c.num_objects() == 0) {
    rep.sifted = false;
    SiftedWitness w;
    w.empty_category = true;
    rep.witness = w;
    return rep;
  }
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    for (std::size_t b = 0; b < c.num_objects(); ++b) {
      // cospans a → x ← b
      struct Cospan {
        std::size_t apex, f, g;
      };
      std::vector<Cospan> cospans;
      for (std::size_t x = 0; x < c.num_objects(); ++x)
        for (std::size_t f : c.hom(a, x))
          for (std::size_t g : c.hom(b, x)) cospans.push_back({x, f, g});
      auto fail = [&](SiftedWitness w) {
        w.obj_a = a;
        w.obj_b = b;
        rep.sifted = false;
        rep.witness = std::move(w);
        return rep;
      };
      if (cospans.empty()) {
        SiftedWitness w;
        w.empty_cospans = true;
        return fail(std::move(w));
      }
      UnionFind uf(cospans.size());
      for (std::size_t i = 0; i < cospans.size(); ++i)
        for (std::size_t j = 0; j < cospans.size(); ++j) {
          if (uf.same(i, j)) continue;
          for (std::size_t h : c.hom(cospans[i].apex, cospans[j].apex))
            if (c.compose(h, cospans[i].f) == cospans[j].f &&
                c.compose(h, cospans[i].g) == cospans[j].g) {
              uf.unite(i, j);
              break;
            }
        }
      std::size_t root0 = uf.find(0);
      bool connected = true;
      for (std::size_t i = 1; i < cospans.size(); ++i)
        if (uf.find(i) != root0) connected = false;
      if (!connected) {
        SiftedWitness w;
        std::map<std::size_t, std::vector<std::string>> comps;
        for (std::size_t i = 0; i < cospans.size(); ++i)
          comps[uf.find(i)].push_back("(" + c.object_name(cospans[i].apex) + "; " +
                                      c.mor(cospans[i].f).id + ", " + c.mor(cospans[i].g).id + ")");
        for (auto& [_, v] : comps) w.components.push_back(std::move(v));
        return fail(std::move(w));
      }
    }
  }
  rep.sifted = true;
  return rep;
}

CatWithEmbedding fam_completion(const CatPtr& cp, std::size_t max_family_size) {
  if (max_family_size < 1) throw BoundTooSmall("fam_completion: max_family_size must be >= 1");
  const FinCat& c = *cp;

  // objects: sorted multisets of C-objects, size 0..bound
  std::vector<std::vector<std::size_t>> families;
  std::vector<std::vector<std::size_t>> frontier = {{}};
  families.push_back({});
  for (std::size_t s = 1; s <= max_family_size; ++s) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& fam : frontier) {
      std::size_t lo = fam.empty() ? 0 : fam.back();
      for (std::size_t o = lo; o < c.num_objects(); ++o) {
        auto ext = fam;
        ext.push_back(o);
        next.push_back(ext);
        families.push_back(std::move(ext));
      }
    }
    frontier = std::move(next);
  }
  std::sort(families.begin(), families.end(),
            [](const auto& x, const auto& y) {
              return x.size() != y.size() ? x.size() < y.size() : x < y;
            });

  auto fam_name = [&](const std::vector<std::size_t>& fam) {
    std::string s = "[";
    for (std::size_t i = 0; i < fam.size(); ++i) {
      if (i) s += ",";
      s += c.object_name(fam[i]);
    }
    return s + "]";
  };

  std::vector<std::string> obj_names;
  for (const auto& f : families) obj_names.push_back(fam_name(f));

  // morphisms: reindexing r: m→n plus componentwise C-morphisms
  struct FamMor {
    std::size_t src_fam, dst_fam;
    std::vector<std::size_t> reindex;
    std::vector<std::size_t> comps;
  };
  std::vector<FamMor> fmors;
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>, std::vector<std::size_t>>,
           std::size_t>
      index;

  for (std::size_t sf = 0; sf < families.size(); ++sf) {
    for (std::size_t df = 0; df < families.size(); ++df) {
      const auto& A = families[sf];
      const auto& B = families[df];
      for (const auto& r : all_functions(A.size(), B.size())) {
        // componentwise morphisms A[i] → B[r(i)]
        std::vector<std::vector<std::size_t>> choices(A.size());
        bool ok = true;
        for (std::size_t i = 0; i < A.size(); ++i) {
          choices[i] = c.hom(A[i], B[r(i)]);
          if (choices[i].empty()) ok = false;
        }
        if (!ok) continue;
        std::vector<std::size_t> pick(A.size(), 0);
        for (;;) {
          std::vector<std::size_t> comps(A.size());
          for (std::size_t i = 0; i < A.size(); ++i) comps[i] = choices[i][pick[i]];
          index[{sf, df, r.map, comps}] = fmors.size();
          fmors.push_back({sf, df, r.map, comps});
          std::size_t i = A.size();
          bool done = true;
          while (i > 0) {
            --i;
            if (++pick[i] < choices[i].size()) {
              done = false;
              break;
            }
            pick[i] = 0;
          }
          if (done) break;
        }
      }
    }
  }

  std::vector<Mor> mors;
  for (std::size_t i = 0; i < fmors.size(); ++i) {
    const auto& fm = fmors[i];
    std::string id = "fam" + std::to_string(i) + ":" + fam_name(families[fm.src_fam]) + "->" +
                     fam_name(families[fm.dst_fam]);
    mors.push_back({id, fm.src_fam, fm.dst_fam});
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
  for (std::size_t g = 0; g < fmors.size(); ++g)
    for (std::size_t f = 0; f < fmors.size(); ++f) {
      if (fmors[f].dst_fam != fmors[g].src_fam) continue;
      const auto& F = fmors[f];
      const auto& G = fmors[g];
      std::vector<std::size_t> r(F.reindex.size()), comps(F.reindex.size());
      for (std::size_t i = 0; i < F.reindex.size(); ++i) {
        r[i] = G.reindex[F.reindex[i]];
        comps[i] = c.compose(G.comps[F.reindex[i]], F.comps[i]);
      }
      comp[{g, f}] = index.at({F.src_fam, G.dst_fam, r, comps});
    }

  std::vector<std::size_t> idents(families.size());
  for (std::size_t o = 0; o < families.size(); ++o) {
    std::vector<std::size_t> r(families[o].size()), comps(families[o].size());
    std::iota(r.begin(), r.end(), std::size_t{0});
    for (std::size_t i = 0; i < families[o].size(); ++i)
      comps[i] = c.identity(families[o][i]);
    idents[o] = index.at({o, o, r, comps});
  }

  CatPtr fam = fmors.size() <= 2000
                   ? FinCat::validate({obj_names, mors, comp, idents})
                   : FinCat::from_trusted(obj_names, mors, comp, idents);

  // inclusion of singletons
  std::vector<std::size_t> omap(c.num_objects()), mmap(c.num_morphisms());
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    auto it = std::find(families.begin(), families.end(), std::vector<std::size_t>{o});
    omap[o] = static_cast<std::size_t>(it - families.begin());
  }
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    mmap[m] = index.at({omap[c.src(m)], omap[c.dst(m)], {0}, {m}});

  return CatWithEmbedding(fam, FinFunctor(cp, fam, std::move(omap), std::move(mmap)), true);
}

std::vector<std::size_t> idempotents(const FinCat& c) {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    if (c.src(m) == c.dst(m) && c.compose(m, m) == m) out.push_back(m);
  return out;
}

SplitResult split_idempotents(const CatPtr& cp) {
  const FinCat& c = *cp;
  // objects: (c-object, idempotent on it)
  std::vector<std::pair<std::size_t, std::size_t>> objs;
  for (std::size_t e : idempotents(c)) objs.emplace_back(c.src(e), e);

  std::vector<std::string> obj_names;
  for (auto& [o, e] : objs) obj_names.push_back("(" + c.object_name(o) + "," + c.mor(e).id + ")");

  // morphisms (c,e) → (d,f): m: c→d with f∘m∘e = m
  struct SplitMor {
    std::size_t so, to, m;
  };
  std::vector<SplitMor> smors;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t so = 0; so < objs.size(); ++so)
    for (std::size_t to = 0; to < objs.size(); ++to)
      for (std::size_t m : c.hom(objs[so].first, objs[to].first))
        if (c.compose(objs[to].second, c.compose(m, objs[so].second)) == m) {
          index[{so, to, m}] = smors.size();
          smors.push_back({so, to, m});
        }

  std::vector<Mor> mors;
  for (std::size_t i = 0; i < smors.size(); ++i)
    mors.push_back({c.mor(smors[i].m).id + "@" + std::to_string(smors[i].so) + ">" +
                        std::to_string(smors[i].to),
                    smors[i].so, smors[i].to});

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> comp;
  for (std::size_t g = 0; g < smors.size(); ++g)
    for (std::size_t f = 0; f < smors.size(); ++f)
      if (smors[f].to == smors[g].so)
        comp[{g, f}] = index.at({smors[f].so, smors[g].to, c.compose(smors[g].m, smors[f].m)});

  std::vector<std::size_t> idents(objs.size());
  for (std::size_t o = 0; o < objs.size(); ++o)
    idents[o] = index.at({o, o, objs[o].second});

  CatPtr sc = smors.size() <= 2000 ? FinCat::validate({obj_names, mors, comp, idents})
                                   : FinCat::from_trusted(obj_names, mors, comp, idents);

  // every idempotent in the result must split
  for (std::size_t e : idempotents(*sc)) {
    std::size_t so = sc->src(e);
    std::size_t m = smors[e].m;  // underlying C-morphism, idempotent in C
    // splits through (object, m)
    auto through = std::find(objs.begin(), objs.end(),
                             std::make_pair(objs[so].first, m));
    if (through == objs.end() || !index.count({so, std::size_t(through - objs.begin()), m}) ||
        !index.count({std::size_t(through - objs.begin()), so, m}))
      throw CatError(CatErrorKind::AssocViolation, "idempotent failed to split in completion");
  }

  std::vector<std::size_t> omap(c.num_objects()), mmap(c.num_morphisms());
  for (std::size_t o = 0; o < c.num_objects(); ++o) {
    auto it = std::find(objs.begin(), objs.end(), std::make_pair(o, c.identity(o)));
    omap[o] = static_cast<std::size_t>(it - objs.begin());
  }
  for (std::size_t m = 0; m < c.num_morphisms(); ++m)
    mmap[m] = index.at({omap[c.src(m)], omap[c.dst(m)], m});

  std::vector<std::size_t> underlying;
  underlying.reserve(smors.size());
  for (const auto& sm : smors) underlying.push_back(sm.m);

  return SplitResult(sc, FinFunctor(cp, sc, std::move(omap), std::move(mmap)), std::move(objs),
                     std::move(underlying));
}

}  // namespace ct
