use proptest::prelude::*;

use xaviers::bijection::{decompose_xavier, XavierCase};
use xaviers::creature::Creature;
use xaviers::document::{emit_xavier, parse_xavier};
use xaviers::enumerate::levels;
use xaviers::render::{render_ascii, RenderOptions};
use xaviers::xavier::{canonical_drop, push};
use xaviers::{decode, encode, Letter, Shape, Word, Xavier};

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 0..=max_len).prop_map(Word)
}

fn xavier(max_pieces: usize) -> impl Strategy<Value = Xavier> {
    word(max_pieces - 1).prop_map(|w| decode(&w).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn codec_round_trips_on_long_words(w in word(60)) {
        let x = decode(&w).unwrap();
        prop_assert_eq!(x.len(), w.len() + 1);
        prop_assert_eq!(Xavier::canonicalize(x.pieces()).unwrap(), x.clone());
        prop_assert_eq!(x.classify().shape, w.classify());
        prop_assert_eq!(encode(&x), w);
    }

    #[test]
    fn parity_and_comparability(x in xavier(40)) {
        for (i, p) in x.pieces().iter().enumerate() {
            prop_assert_eq!((i64::from(p.floor) + p.pos).rem_euclid(2), 0);
            for q in &x.pieces()[i + 1..] {
                if p.overlaps(q) {
                    prop_assert_ne!(p.floor, q.floor);
                }
            }
        }
    }

    #[test]
    fn up_set_complement_is_support_closed(x in xavier(30), mask in any::<u64>()) {
        let seeds: Vec<_> = x.pieces().iter().enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, p)| *p)
            .collect();
        let cut = x.up_set(&seeds).unwrap();
        prop_assert!(seeds.iter().all(|s| cut.contains(s)));
        let rest: Vec<_> = x.pieces().iter().filter(|p| !cut.contains(p)).copied().collect();
        for p in rest.iter().filter(|p| p.floor > 0) {
            let supporters: Vec<_> = x.pieces().iter()
                .filter(|q| q.floor + 1 == p.floor && (q.pos - p.pos).abs() == 1)
                .collect();
            prop_assert!(supporters.iter().all(|q| rest.contains(q)));
        }
    }

    #[test]
    fn drop_is_idempotent_and_push_is_pure(x in xavier(40), pos in -20i64..20) {
        prop_assert_eq!(canonical_drop(x.pieces()).unwrap(), x.clone());
        prop_assert_eq!(push(x.pieces(), pos), push(x.pieces(), pos));
    }

    #[test]
    fn document_round_trip(x in xavier(25)) {
        let text = emit_xavier(&x);
        let back = parse_xavier(&text).unwrap();
        prop_assert_eq!(emit_xavier(&back), text);
        prop_assert_eq!(back, x);
    }

    #[test]
    fn ascii_dimensions(x in xavier(25)) {
        let picture = render_ascii(&x, &RenderOptions::default());
        let lines: Vec<&str> = picture.lines().collect();
        prop_assert_eq!(lines.len(), x.max_floor() as usize + 1);
        let width = lines.iter().map(|l| l.len()).max().unwrap();
        prop_assert_eq!(width as i64, 2 * (x.max_pos() - x.min_pos()) + 4);
        prop_assert!(lines.iter().all(|l| !l.ends_with(' ')));
    }

    #[test]
    fn xavier_split_preserves_weight(x in xavier(40)) {
        if let XavierCase::Split { half, rest } = decompose_xavier(&x) {
            prop_assert_eq!(half.len() + rest.len(), x.len());
            prop_assert_eq!(rest.bottom().len() + 1, x.bottom().len());
        }
    }
}

/// The tail only ever shrinks while encoding; for half-pyramids it stays
/// empty, for pyramids it may be non-empty but never grows.
#[test]
fn tail_witnesses_of_the_prefix_sum_claim() {
    for x in levels().take(8).flatten() {
        let shape = x.classify().shape;
        let mut creature = Creature::from_xavier(&x);
        let mut tail = creature.tail.len();
        if shape == Shape::HalfPyramid {
            assert_eq!(tail, 0, "{x}");
        }
        while creature.extract_letter().is_some() {
            assert!(creature.tail.len() <= tail, "tail grew while encoding {x}");
            tail = creature.tail.len();
            if shape == Shape::HalfPyramid {
                assert_eq!(tail, 0, "{x}");
            }
        }
    }
}
