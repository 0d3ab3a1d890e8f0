//! Kostka-Foulkes polynomials by the charge statistic.

use crate::combinat::{partitions, Partition};
use crate::exactalg::QPoly;

use super::graded::GradedCharacter;

/// Semistandard tableaux of shape `shape` and content `content`, as rows.
pub fn ssyt(shape: &Partition, content: &Partition) -> Vec<Vec<Vec<usize>>> {
    if shape.size() != content.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let rows = shape.len();
    let mut current = vec![0usize; rows];
    let mut filling: Vec<Vec<usize>> = vec![Vec::new(); rows];
    strips(shape, content.parts(), 1, &mut current, &mut filling, &mut out);
    out
}

fn strips(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    current: &mut Vec<usize>,
    filling: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    let Some((&k, rest)) = content.split_first() else {
        if current.iter().enumerate().all(|(i, &c)| c == shape.part(i)) {
            out.push(filling.clone());
        }
        return;
    };
    let before = current.clone();
    add_strip(shape, rest, letter, k, 0, &before, current, filling, out);
}

/// Place `left` copies of `letter` as a horizontal strip, choosing row by row.
#[allow(clippy::too_many_arguments)]
fn add_strip(
    shape: &Partition,
    rest: &[usize],
    letter: usize,
    left: usize,
    row: usize,
    before: &[usize],
    current: &mut Vec<usize>,
    filling: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<Vec<usize>>>,
) {
    if left == 0 {
        strips(shape, rest, letter + 1, current, filling, out);
        return;
    }
    if row == current.len() {
        return;
    }
    // horizontal strip: row i may grow up to the old length of row i-1
    let cap = if row == 0 { shape.part(0) } else { before[row - 1].min(shape.part(row)) };
    let room = cap.saturating_sub(current[row]);
    let old = current[row];
    for k in (0..=room.min(left)).rev() {
        current[row] = old + k;
        filling[row].extend(std::iter::repeat_n(letter, k));
        add_strip(shape, rest, letter, left - k, row + 1, before, current, filling, out);
        filling[row].truncate(old);
    }
    current[row] = old;
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> usize {
    let mut letters: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    while letters.iter().any(Option::is_some) {
        let top = letters.iter().flatten().max().copied().unwrap();
        let len = letters.len();
        // scan leftwards cyclically from the right end
        let mut pos = len;
        let mut index = 0;
        for target in 1..=top {
            let mut p = pos;
            let mut wrapped = false;
            loop {
                if p == 0 {
                    p = len;
                    wrapped = true;
                }
                p -= 1;
                if letters[p] == Some(target) {
                    break;
                }
            }
            if target > 1 && wrapped {
                index += 1;
            }
            total += index;
            letters[p] = None;
            pos = p;
        }
    }
    total
}

fn reading_word(t: &[Vec<usize>]) -> Vec<usize> {
    t.iter().rev().flat_map(|r| r.iter().copied()).collect()
}

/// `K_{μλ}(t) = Σ_{T ∈ SSYT(μ, λ)} t^{charge(T)}`
pub fn kostka_foulkes(mu: &Partition, lambda: &Partition) -> QPoly {
    ssyt(mu, lambda)
        .iter()
        .map(|t| QPoly::t_pow(charge(&reading_word(t))))
        .fold(QPoly::zero(), |a, b| a + b)
}

/// `gch M_λ = Σ_μ K_{μλ}(t) [L_μ]`
pub fn graded_char_m_lambda(lambda: &Partition) -> GradedCharacter<Partition> {
    let mut g = GradedCharacter::new();
    for mu in partitions(lambda.size()) {
        g.add_term(mu.clone(), kostka_foulkes(&mu, lambda));
    }
    g
}
