use proptest::prelude::*;

use shalika_core::exact::{tchar_mul, GaussRat, Rat, TorusCharVec};
use shalika_core::io::{parse_module, ModuleRecord};
use shalika_core::langlands::{
    dual, gl2_has_shalika, is_symplectic_eta, langlands_param, twist, ArchField, CuspidalFactor,
    Gl2Generic, LParameter, MultChar, StandardModule, WeilIrr,
};
use shalika_core::orbits::{classify, orbit_table, Composition, ParabolicDatum, Perm};

fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| Rat::new(p, q).unwrap())
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn gauss() -> impl Strategy<Value = GaussRat> {
    (rat(), rat()).prop_map(|(a, b)| GaussRat::new(a, b))
}

fn small_gauss() -> impl Strategy<Value = GaussRat> {
    (-3i64..=3, prop::sample::select(vec![0i64, 0, 1, -2]))
        .prop_map(|(a, b)| GaussRat::new(Rat::new(a, 2).unwrap(), Rat::new(b, 3).unwrap()))
}

fn field() -> impl Strategy<Value = ArchField> {
    prop_oneof![Just(ArchField::Real), Just(ArchField::Complex)]
}

fn mult_char(f: ArchField) -> BoxedStrategy<MultChar> {
    match f {
        ArchField::Real => (0i64..=1, small_gauss())
            .prop_map(|(k, z)| MultChar::real(k, z).unwrap())
            .boxed(),
        ArchField::Complex => (-3i64..=3, small_gauss())
            .prop_map(|(k, z)| MultChar::complex(k, z))
            .boxed(),
    }
}

fn weil_irr(f: ArchField) -> BoxedStrategy<WeilIrr> {
    match f {
        ArchField::Real => prop_oneof![
            mult_char(f).prop_map(WeilIrr::OneDim),
            (1i64..=4, small_gauss()).prop_map(|(k, z)| WeilIrr::two_dim(k, z).unwrap()),
        ]
        .boxed(),
        ArchField::Complex => mult_char(f).prop_map(WeilIrr::OneDim).boxed(),
    }
}

fn param_and_eta() -> impl Strategy<Value = (ArchField, Vec<WeilIrr>, MultChar)> {
    field().prop_flat_map(|f| {
        (
            Just(f),
            prop::collection::vec(weil_irr(f), 1..6),
            mult_char(f),
        )
    })
}

proptest! {
    #[test]
    fn rat_field_axioms(a in rat(), b in rat(), c in rat(), d in nonzero_rat()) {
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a - a, Rat::zero());
        prop_assert_eq!(d * d.recip().unwrap(), Rat::one());
        prop_assert_eq!(a.checked_div(&d).unwrap() * d, a);
    }

    #[test]
    fn rat_text_roundtrip(a in rat()) {
        prop_assert_eq!(a.to_string().parse::<Rat>().unwrap(), a);
    }

    #[test]
    fn gauss_axioms(x in gauss(), y in gauss(), z in gauss()) {
        prop_assert_eq!((x * y) * z, x * (y * z));
        prop_assert_eq!(x * (y + z), x * y + x * z);
        prop_assert_eq!((x * y).conj(), x.conj() * y.conj());
        prop_assert_eq!((x * x.conj()).re, x.norm_sq());
        if !y.is_zero() {
            prop_assert_eq!(x.checked_div(&y).unwrap() * y, x);
        }
    }

    #[test]
    fn gauss_text_roundtrip(x in gauss()) {
        prop_assert_eq!(x.to_string().parse::<GaussRat>().unwrap(), x);
    }

    #[test]
    fn torus_characters_form_a_group(
        a in prop::collection::vec((-5i64..=5, 0u8..=1), 4),
        b in prop::collection::vec((-5i64..=5, 0u8..=1), 4),
        c in prop::collection::vec((-5i64..=5, 0u8..=1), 4),
    ) {
        let mk = |v: &Vec<(i64, u8)>| {
            TorusCharVec::new(v.iter().map(|x| x.0).collect(), v.iter().map(|x| x.1).collect()).unwrap()
        };
        let (a, b, c) = (mk(&a), mk(&b), mk(&c));
        let ab_c = tchar_mul(&tchar_mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = tchar_mul(&a, &tchar_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert_eq!(tchar_mul(&a, &b).unwrap(), tchar_mul(&b, &a).unwrap());
        prop_assert!(tchar_mul(&a, &a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn dual_and_twist_are_involutive((_, parts, eta) in param_and_eta()) {
        for x in &parts {
            prop_assert_eq!(&dual(&dual(x)), x);
            let back = twist(&twist(x, &eta).unwrap(), &eta.inverse()).unwrap();
            prop_assert_eq!(&back, x);
            let partner = twist(&dual(x), &eta).unwrap();
            prop_assert_eq!(&twist(&dual(&partner), &eta).unwrap(), x);
        }
    }

    #[test]
    fn symplectic_ignores_order(
        (f, parts, eta) in param_and_eta(),
        rot in 0usize..6,
    ) {
        let phi = LParameter::new(f, parts.clone()).unwrap();
        let mut shuffled = parts.clone();
        shuffled.reverse();
        let len = shuffled.len();
        shuffled.rotate_left(rot % len);
        let psi = LParameter::new(f, shuffled).unwrap();
        let a = is_symplectic_eta(&phi, &eta).unwrap();
        let b = is_symplectic_eta(&psi, &eta).unwrap();
        prop_assert_eq!(a.symplectic, b.symplectic);
        if a.symplectic {
            prop_assert_eq!(phi.dim() % 2, 0);
        }
    }

    #[test]
    fn symplectic_partner_doubling((f, parts, eta) in param_and_eta()) {
        // phi + phi^vee . eta is always eta-symplectic
        let mut all = parts.clone();
        all.extend(parts.iter().map(|x| twist(&dual(x), &eta).unwrap()));
        let phi = LParameter::new(f, all).unwrap();
        prop_assert!(is_symplectic_eta(&phi, &eta).unwrap().symplectic);
    }

    #[test]
    fn gl2_singleton(k in 1i64..=5, z in small_gauss(), eta in mult_char(ArchField::Real)) {
        let phi = LParameter::new(ArchField::Real, vec![WeilIrr::two_dim(k, z).unwrap()]).unwrap();
        let gl2 = gl2_has_shalika(&Gl2Generic::Disc { k, lambda: z }, &eta).unwrap();
        prop_assert_eq!(gl2, is_symplectic_eta(&phi, &eta).unwrap().symplectic);
    }

    #[test]
    fn perm_inverse_and_text(v in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = Perm::from_images(v).unwrap();
        prop_assert_eq!(p.compose(&p.inverse()), Perm::identity(7));
        prop_assert_eq!(p.to_string().parse::<Perm>().unwrap(), p);
    }

    #[test]
    fn classify_agrees_with_table(idx in 0usize..1000) {
        let comps = [4usize, 6].iter().flat_map(|&m| Composition::all_of(m)).collect::<Vec<_>>();
        let p = ParabolicDatum::new(comps[idx % comps.len()].clone());
        let table = orbit_table(&p);
        let d = &table[(idx / comps.len()) % table.len()];
        prop_assert_eq!(&classify(&d.omega, &p).unwrap(), d);
    }

    #[test]
    fn module_json_roundtrip(
        chars in prop::collection::vec((0i64..=1, small_gauss()), 0..3),
        discs in prop::collection::vec((1i64..=4, small_gauss()), 0..3),
        eta in mult_char(ArchField::Real),
    ) {
        prop_assume!(!chars.is_empty() || !discs.is_empty());
        let mut factors: Vec<CuspidalFactor> = chars
            .iter()
            .map(|&(k, z)| CuspidalFactor::Char(MultChar::real(k, z).unwrap()))
            .collect();
        factors.extend(discs.iter().map(|&(k, lambda)| CuspidalFactor::Disc { k, lambda }));
        let m = StandardModule::normalized(ArchField::Real, factors).unwrap();
        let text = serde_json::to_string(&ModuleRecord::from_module(&m, &eta)).unwrap();
        let back = parse_module(&text).unwrap();
        prop_assert_eq!(&back.module, &m);
        prop_assert_eq!(back.eta, eta);
        prop_assert_eq!(langlands_param(&back.module).unwrap(), langlands_param(&m).unwrap());
    }
}
