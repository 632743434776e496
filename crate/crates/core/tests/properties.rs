use proptest::prelude::*;

use affine_h2::document::{export_json, import_json, MetaDocument};
use affine_h2::golden::{ratio, GoldenNumber};
use affine_h2::group::{reflection, stabilizer_of, AffineElement, Perm5};
use affine_h2::lattice::{
    area_unit, cross_par, embed, inner4, plane_norm2, tau_scale_par, Coord5, Space,
};
use affine_h2::tiling::decagon_root;
use affine_h2::Rational;

fn golden() -> impl Strategy<Value = GoldenNumber> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6)
        .prop_map(|(a, b, c, d)| GoldenNumber::new(ratio(a, b), ratio(c, d)))
}

fn coord() -> impl Strategy<Value = Coord5> {
    prop::array::uniform5(-8i64..=8).prop_map(Coord5::from_ints)
}

fn rational_coord() -> impl Strategy<Value = Coord5> {
    prop::array::uniform5((-8i64..=8, 1i64..=4)).prop_map(|c| Coord5::new(c.map(|(n, d)| ratio(n, d))))
}

fn perm() -> impl Strategy<Value = Perm5> {
    Just([0usize, 1, 2, 3, 4])
        .prop_shuffle()
        .prop_map(|v| Perm5([v[0], v[1], v[2], v[3], v[4]]))
}

fn element() -> impl Strategy<Value = AffineElement> {
    (prop::bool::ANY, perm(), coord()).prop_map(|(neg, p, t)| AffineElement::new(if neg { -1 } else { 1 }, p, t))
}

fn root() -> impl Strategy<Value = Coord5> {
    (1usize..=5, 1usize..=4).prop_map(|(i, j)| Coord5::root(i, if j >= i { j + 1 } else { j }))
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
}

proptest! {
    #[test]
    fn golden_field_laws(a in golden(), b in golden(), c in golden()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a * b).conjugate(), a.conjugate() * b.conjugate());
        prop_assert!(((a * b).to_f64() - a.to_f64() * b.to_f64()).abs() < 1e-9);
        if !a.is_zero() {
            prop_assert_eq!(a * a.inverse().unwrap(), GoldenNumber::one());
        }
    }

    #[test]
    fn golden_sign_matches_float(a in golden()) {
        let f = a.to_f64();
        if f.abs() > 1e-9 {
            prop_assert_eq!(a.signum(), if f > 0.0 { 1 } else { -1 });
        }
        prop_assert_eq!(a.is_zero(), a.signum() == 0);
    }

    #[test]
    fn tau_scaling_is_plane_dilation(v in coord()) {
        let t = GoldenNumber::tau().to_f64();
        let (x, y) = embed(&v, Space::Parallel);
        prop_assert!(close(embed(&tau_scale_par(&v), Space::Parallel), (t * x, t * y)));
    }

    #[test]
    fn exact_forms_match_embedding(u in rational_coord(), v in rational_coord()) {
        let (ux, uy) = u.par();
        let (vx, vy) = v.par();
        prop_assert!((plane_norm2(&u).to_f64() - (ux * ux + uy * uy)).abs() < 1e-9);
        let cross = ux * vy - uy * vx;
        prop_assert!((cross_par(&u, &v).to_f64() * area_unit() - cross).abs() < 1e-9);
    }

    #[test]
    fn canonical_modulo_all_ones(v in rational_coord(), s in -5i64..=5) {
        let shifted = v + Coord5::new([ratio(s, 1); 5]);
        prop_assert_eq!(shifted, v);
    }

    #[test]
    fn composition_is_associative_and_acts(a in element(), b in element(), c in element(), p in rational_coord()) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert_eq!(a.compose(&b).apply(&p), a.apply(&b.apply(&p)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn elements_are_isometries(a in element(), p in rational_coord(), q in rational_coord()) {
        let d = p - q;
        let e = a.apply(&p) - a.apply(&q);
        prop_assert_eq!(inner4(&d, &d), inner4(&e, &e));
    }

    #[test]
    fn affine_reflections_are_involutions(r in root(), n in -6i64..=6, p in rational_coord()) {
        let g = reflection(&r, n).unwrap();
        prop_assert!(g.compose(&g).is_identity());
        let image = g.apply(&p);
        prop_assert_eq!(inner4(&image, &r), Rational::from_integer(2 * n) - inner4(&p, &r));
    }

    #[test]
    fn stabilizers_fix_their_center(n in prop::array::uniform4(-3i64..=3)) {
        let c = affine_h2::group::fixed_point(n[0], n[1], n[2], n[3]);
        let s = stabilizer_of(&c).unwrap();
        prop_assert!(s.iter().all(|g| g.apply(&c) == c));
    }

    #[test]
    fn plane_motions_preserve_decagon(n in prop::array::uniform4(-3i64..=3), m in 0usize..10) {
        let d = decagon_root().unwrap();
        let c = affine_h2::group::fixed_point(n[0], n[1], n[2], n[3]);
        let g = stabilizer_of(&c).unwrap()[m];
        let moved = d.transform(&g);
        prop_assert_eq!(moved.area(), d.area());
        prop_assert_eq!(moved.len(), d.len());
        prop_assert!(moved.conflict_audit().is_empty());
    }

    #[test]
    fn document_round_trip(t in rational_coord()) {
        let d = decagon_root().unwrap().transform(&AffineElement::translation(t));
        let back = import_json(&export_json(&d, MetaDocument::default())).unwrap();
        prop_assert_eq!(back.keys(), d.keys());
    }
}
