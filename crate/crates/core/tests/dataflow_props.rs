mod common;

use common::*;
use linmodels::dataflow::{
    graft_template, image_lincomb, perturbation_bound, read_trace_csv, reflect_image, render_frame, respects_bound,
    write_trace_csv, DataflowProgram, Engine, GeneralizedImage, MorphSchedule, ProgramFile, Reflection, TemplateKind,
    Trace, WeightMatrix,
};
use proptest::prelude::*;

fn with_state(
    prog: impl Strategy<Value = DataflowProgram>,
) -> impl Strategy<Value = (DataflowProgram, Vec<GeneralizedImage>)> {
    prog.prop_flat_map(|p| {
        let n = p.templates().len();
        let size = p.image_size();
        (Just(p), images(n, size))
    })
}

fn combine(c1: f64, a: &Trace, c2: f64, b: &Trace) -> Trace {
    Trace {
        states: a
            .states
            .iter()
            .zip(&b.states)
            .map(|(x, y)| {
                x.iter().zip(y).map(|(u, v)| image_lincomb(&[c1, c2], &[u.clone(), v.clone()]).unwrap()).collect()
            })
            .collect(),
    }
}

fn frames(tr: &Trace, width: usize) -> Vec<Vec<u8>> {
    tr.states.iter().map(|s| render_frame(s, width, -1.0, 1.0).unwrap()).collect()
}

/// Symmetric masks for a random pair sum.
fn reflection(size: usize) -> impl Strategy<Value = Reflection> {
    (0..2 * size - 1).prop_flat_map(move |sum| {
        let lo = sum.saturating_sub(size - 1);
        let hi = sum.min(size - 1);
        prop::collection::vec(any::<bool>(), hi - lo + 1).prop_map(move |keep| {
            let mask = (lo..=hi).zip(keep).filter(|(_, k)| *k).flat_map(|(i, _)| [i, sum - i]).collect();
            Reflection::new(sum, mask)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn superposition(
        (p, s1) in with_state(linear_program(16, 12)),
        c1 in -2.0f64..2.0,
        c2 in -2.0f64..2.0,
        ticks in 1usize..20,
    ) {
        let s2: Vec<GeneralizedImage> = s1.iter().map(|i| i.map(|v| (v * 7.0).sin())).collect();
        let mixed: Vec<GeneralizedImage> = s1
            .iter()
            .zip(&s2)
            .map(|(a, b)| image_lincomb(&[c1, c2], &[a.clone(), b.clone()]).unwrap())
            .collect();
        let e = Engine::sequential();
        let ext = no_externals();
        let t1 = e.run(&p, s1, &ext, ticks).unwrap();
        let t2 = e.run(&p, s2, &ext, ticks).unwrap();
        let tm = e.run(&p, mixed, &ext, ticks).unwrap();
        let diff = tm.max_abs_diff(&combine(c1, &t1, c2, &t2));
        prop_assert!(diff.iter().all(|d| *d <= 1e-9), "{diff:?}");
    }

    #[test]
    fn scaling_a_feedforward_chain(depth in 1usize..8, ws in prop::collection::vec(-2.0f64..2.0, 8), c in -2.0f64..2.0, img in images(1, 5)) {
        let mut p = DataflowProgram::unwired(vec![TemplateKind::Delay; depth + 1], 5).unwrap();
        for (k, w) in ws.iter().take(depth).enumerate() {
            p.connect(k, k + 1, 0, *w);
        }
        let scaled = p.with_weights(p.weights().scale(c)).unwrap();
        let mut init = vec![GeneralizedImage::zeros(5); depth + 1];
        init[0] = img[0].clone();
        let e = Engine::sequential();
        let a = e.run(&p, init.clone(), &no_externals(), depth).unwrap();
        let b = e.run(&scaled, init, &no_externals(), depth).unwrap();
        let want = a.states[depth][depth].scale(c.powi(depth as i32));
        let got = &b.states[depth][depth];
        prop_assert!(got.max_abs_diff(&want) <= 1e-12 * (1.0 + want.sup_norm()));
    }

    #[test]
    fn zero_graft_is_neutral(
        (p, s) in with_state(lipschitz_program(16, 8)),
        extra in prop_oneof![Just(TemplateKind::Product), Just(TemplateKind::Tanh), Just(TemplateKind::Const { value: 1.0 }), Just(TemplateKind::Delay)],
        ticks in 1usize..15,
    ) {
        let g = graft_template(&p, extra).unwrap();
        let mut gs = s.clone();
        gs.push(GeneralizedImage::constant(p.image_size(), 0.75));
        let e = Engine::sequential();
        let a = e.run(&p, s, &no_externals(), ticks).unwrap();
        let b = e.run(&g, gs, &no_externals(), ticks).unwrap();
        prop_assert!(b.project(p.templates().len()).bits_eq(&a));
    }

    #[test]
    fn morph_respects_continuity_bound(
        (p, s) in with_state(lipschitz_program(16, 8)),
        end_seed in any::<u64>(),
        ramp in 1usize..12,
        ticks in 1usize..16,
    ) {
        let (r, c) = p.weights().shape();
        let end = WeightMatrix::from_rows(
            (0..r).map(|i| (0..c).map(|j| (((end_seed as usize + 31 * i + 17 * j) % 97) as f64 / 97.0 - 0.5) / c as f64).collect()).collect(),
            c,
        ).unwrap();
        let sched = MorphSchedule::new(p.weights().clone(), end, ramp).unwrap();
        let e = Engine::sequential();
        let reference = e.run(&p, s.clone(), &no_externals(), ticks).unwrap();
        let morphed = e.morph_run(&p, &sched, s, &no_externals(), ticks).unwrap();
        let bound = perturbation_bound(&p, &reference, &vec![p.weights().clone(); ticks], &sched.weight_sequence(ticks)).unwrap();
        let scale = reference.states.iter().flatten().map(GeneralizedImage::sup_norm).fold(1.0, f64::max);
        prop_assert!(respects_bound(&reference.max_abs_diff(&morphed), &bound, scale));
    }

    #[test]
    fn identical_morph_endpoints_change_nothing((p, s) in with_state(lipschitz_program(8, 6)), ticks in 1usize..10) {
        let sched = MorphSchedule::new(p.weights().clone(), p.weights().clone(), 4).unwrap();
        let e = Engine::sequential();
        let a = e.run(&p, s.clone(), &no_externals(), ticks).unwrap();
        let b = e.morph_run(&p, &sched, s, &no_externals(), ticks).unwrap();
        prop_assert!(a.bits_eq(&b));
    }

    #[test]
    fn lerp_hits_endpoints_exactly(a in weights(3, 4), b in weights(3, 4), ramp in 1usize..20) {
        let s = MorphSchedule::new(a.clone(), b.clone(), ramp).unwrap();
        prop_assert_eq!(s.weights_at(0), a);
        prop_assert_eq!(s.weights_at(ramp), b.clone());
        prop_assert_eq!(s.weights_at(ramp + 5), b);
    }

    #[test]
    fn reflect_is_an_involution((r, img) in (1usize..24).prop_flat_map(|n| (reflection(n), images(1, n)))) {
        let once = reflect_image(&img[0], &r).unwrap();
        prop_assert!(reflect_image(&once, &r).unwrap().bits_eq(&img[0]));
        let mut before = img[0].values().to_vec();
        let mut after = once.values().to_vec();
        before.sort_by(f64::total_cmp);
        after.sort_by(f64::total_cmp);
        prop_assert_eq!(before, after);
    }

    #[test]
    fn deterministic_across_thread_counts((p, s) in with_state(lipschitz_program(32, 10)), ticks in 1usize..10) {
        let base = Engine::sequential().run(&p, s.clone(), &no_externals(), ticks).unwrap();
        for threads in [1, 2, 4] {
            let tr = Engine::with_threads(threads).run(&p, s.clone(), &no_externals(), ticks).unwrap();
            prop_assert!(tr.bits_eq(&base));
            prop_assert_eq!(frames(&tr, p.image_size()), frames(&base, p.image_size()));
        }
    }

    #[test]
    fn trace_csv_round_trip((p, s) in with_state(lipschitz_program(8, 4)), ticks in 0usize..6) {
        let tr = Engine::sequential().run(&p, s, &no_externals(), ticks).unwrap();
        let mut buf = Vec::new();
        write_trace_csv(&tr, &mut buf).unwrap();
        prop_assert!(read_trace_csv(buf.as_slice()).unwrap().bits_eq(&tr));
    }

    #[test]
    fn program_json_round_trip((p, s) in with_state(lipschitz_program(8, 4))) {
        let f = ProgramFile {
            image_size: p.image_size(),
            width: None,
            templates: p.templates().to_vec(),
            weights: p.weights().to_rows(),
            initial: Some(s.iter().map(|i| i.values().to_vec()).collect()),
            externals: Default::default(),
        };
        let back = ProgramFile::from_json(&f.to_json()).unwrap();
        prop_assert_eq!(&back, &f);
        let rebuilt = back.program().unwrap();
        prop_assert_eq!(rebuilt.weights(), p.weights());
    }
}

#[test]
fn geometric_decay_golden() {
    let f = ProgramFile::from_json(r#"{"image_size":1,"templates":[{"kind":"delay"}],"W":[[0.5]],"initial":[[8]]}"#)
        .unwrap();
    let tr = Engine::sequential().run(&f.program().unwrap(), f.initial_state(), &f.externals(), 3).unwrap();
    let got: Vec<u64> = tr.series(0).map(|i| i.values()[0].to_bits()).collect();
    let want: Vec<u64> = [8.0f64, 4.0, 2.0, 1.0].iter().map(|v| v.to_bits()).collect();
    assert_eq!(got, want);
}

#[test]
fn zero_renders_mid_gray() {
    let bytes = render_frame(&[GeneralizedImage::new(vec![-1.0, 0.0, 1.0])], 3, -1.0, 1.0).unwrap();
    assert!(bytes.starts_with(b"P5\n3 1\n255\n"));
    assert_eq!(&bytes[bytes.len() - 3..], &[0, 128, 255]);
}
