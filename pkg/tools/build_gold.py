#!/usr/bin/env python3
"""Regenerate the bundled gold dataset of labeled policy sentences.

The sentences are drawn from public statutory and constitutional texts:
United States civil-rights and equal-credit law (42 U.S.C. 2000a/2000d/
2000e and 15 U.S.C. 1691) and Part III of the Constitution of India,
lightly flattened where the source interleaves list markers.  ``fair``
records state a fairness obligation, prohibition, or guarantee;
``non_fair`` records are definitional or procedural machinery from the
same statutes.  The first five records double as the default seed
documents for document-vector scoring.

Curation rules enforced below keep the bundled lexicons honest:

* the stem ``discriminat-`` appears only as "discriminate",
  "discrimination", or "discriminatory" (the bundled lemmatizer does not
  strip verb or plural inflections, and the scoring guarantees for those
  exact forms are tested);
* sentences labeled ``non_fair`` contain none of the strongly seed-related
  words, so word-relatedness scores on them stay demonstrably below the
  useful thresholds.

Run from the repository root:

    python3 tools/build_gold.py
"""
from __future__ import annotations

import re
import sys
from pathlib import Path

REPO = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(REPO / "src"))

from fairmine.corpus import Dataset, Label, LabeledSentence, save_labeled, word_lemmas  # noqa: E402

OUT = REPO / "src" / "fairmine" / "resources" / "gold_sentences.jsonl"

F = Label.FAIR
N = Label.NON_FAIR

SENTENCES = [
    # ------------------------------------------------------------------
    # Seed policies (also the default seed documents, ids seed-1..seed-5)
    # ------------------------------------------------------------------
    ("seed-1", F, "It shall be an unlawful employment practice for an employer to discriminate against any of his employees or applicants for employment, for an employment agency to discriminate against any individual, or for a labor organization to discriminate against any member thereof or applicant for membership, because he has opposed, any practice made an unlawful employment practice by this title, or because he has made a charge, testified, assisted, or participated in any manner in an investigation, proceeding, or hearing under this title."),
    ("seed-2", F, "It shall be an unlawful employment practice for an employer, labor organization, or employment agency to print or publish or cause to be printed or published any notice or advertisement relating to employment by such an employer or membership in or any classification or referral for employment by such a labor organization, or relating to any classification or referral for employment by such an employment agency, indicating any preference, limitation, specification, or discrimination, based on race, color, religion, sex, or national origin, except that such a notice or advertisement may indicate a preference, limitation, specification, or discrimination based on religion, sex, or national origin when religion, sex, or national origin is a bona fide occupational qualification for employment."),
    ("seed-3", F, "The National Policy on Education (NPE) is a policy formulated by the Government of India to promote education amongst India's people. The policy covers elementary education to colleges in both rural and urban India. This policy calls for \"special emphasis on the removal of disparities and to equalise educational opportunity,\" especially for Indian women, Scheduled Tribes (ST) and the Scheduled Caste (SC) communities."),
    ("seed-4", F, "The right to religious freedom means that people should not be forced to act against their convictions nor restrained from acting in accordance with their convictions in religious matters in private or in public or in association with others"),
    ("seed-5", F, "It shall be an unlawful employment practice for an employer - to fail or refuse to hire or to discharge any individual, or otherwise to discriminate against any individual with respect to his compensation, terms, conditions, or privileges of employment, because of such individual's race, color, religion, sex, or national origin; or - to limit, segregate, or classify his employees in any way which would deprive or tend to deprive any individual of employment opportunities or otherwise adversely affect his status as an employee, because of such individual's race, color, religion, sex, or national origin."),
    # ------------------------------------------------------------------
    # Fairness policies
    # ------------------------------------------------------------------
    ("f-01", F, "It shall be an unlawful employment practice for an employment agency to fail or refuse to refer for employment, or otherwise to discriminate against, any individual because of his race, color, religion, sex, or national origin, or to classify or refer for employment any individual on the basis of his race, color, religion, sex, or national origin."),
    ("f-02", F, "It shall be an unlawful employment practice for a labor organization to exclude or to expel from its membership, or otherwise to discriminate against, any individual because of his race, color, religion, sex, or national origin."),
    ("f-03", F, "It shall be an unlawful employment practice for a labor organization to limit, segregate, or classify its membership or applicants for membership, or to classify or fail or refuse to refer for employment any individual, in any way which would deprive or tend to deprive any individual of employment opportunities, or would limit such employment opportunities or otherwise adversely affect his status as an employee or as an applicant for employment, because of such individual's race, color, religion, sex, or national origin."),
    ("f-04", F, "It shall be an unlawful employment practice for a labor organization to cause or attempt to cause an employer to discriminate against an individual in violation of this section."),
    ("f-05", F, "It shall be an unlawful employment practice for any employer, labor organization, or joint labor-management committee controlling apprenticeship or other training or retraining, including on-the-job training programs, to discriminate against any individual because of his race, color, religion, sex, or national origin in admission to, or employment in, any program established to provide apprenticeship or other training."),
    ("f-06", F, "Notwithstanding any other provision of this title, it shall not be an unlawful employment practice for an employer to apply different standards of compensation, or different terms, conditions, or privileges of employment pursuant to a bona fide seniority or merit system, or a system which measures earnings by quantity or quality of production, or to employees who work in different locations, provided that such differences are not the result of an intention to discriminate because of race, color, religion, sex, or national origin."),
    ("f-07", F, "Nothing contained in this title shall be interpreted to require any employer, employment agency, labor organization, or joint labor-management committee to grant preferential treatment to any individual or to any group because of the race, color, religion, sex, or national origin of such individual or group on account of an imbalance which may exist with respect to the total number or percentage of persons of any race, color, religion, sex, or national origin employed by any employer."),
    ("f-08", F, "It shall be an unlawful employment practice for a respondent, in connection with the selection or referral of applicants or candidates for employment or promotion, to adjust the scores of, use different cutoff scores for, or otherwise alter the results of, employment related tests on the basis of race, color, religion, sex, or national origin."),
    ("f-09", F, "All personnel actions affecting employees or applicants for employment in executive agencies or in those units of the Government of the District of Columbia having positions in the competitive service shall be made free from any discrimination based on race, color, religion, sex, or national origin."),
    ("f-10", F, "It shall be unlawful for any creditor to discriminate against any applicant, with respect to any aspect of a credit transaction, on the basis of race, color, religion, national origin, sex or marital status, or age, provided the applicant has the capacity to contract, or because all or part of the applicant's income derives from any public assistance program."),
    ("f-11", F, "It shall not constitute discrimination for purposes of this subchapter for a creditor to make an inquiry of marital status if such inquiry is for the purpose of ascertaining the creditor's rights and remedies applicable to the particular extension of credit and not to discriminate in a determination of creditworthiness."),
    ("f-12", F, "It shall not constitute discrimination for purposes of this subchapter for a creditor to make an inquiry of the applicant's age or of whether the applicant's income derives from any public assistance program if such inquiry is for the purpose of determining the amount and probable continuance of income levels, credit history, or other pertinent element of creditworthiness as provided in regulations of the Bureau."),
    ("f-13", F, "All persons shall be entitled to the full and equal enjoyment of the goods, services, facilities, privileges, advantages, and accommodations of any place of public accommodation, as defined in this section, without discrimination or segregation on the ground of race, color, religion, or national origin."),
    ("f-14", F, "No person in the United States shall, on the ground of race, color, or national origin, be excluded from participation in, be denied the benefits of, or be subjected to discrimination under any program or activity receiving Federal financial assistance."),
    ("f-15", F, "The State shall not deny to any person equality before the law or the equal protection of the laws within the territory of India."),
    ("f-16", F, "The State shall not discriminate against any citizen on grounds only of religion, race, caste, sex, place of birth or any of them."),
    ("f-17", F, "No citizen shall, on grounds only of religion, race, caste, sex, place of birth or any of them, be subject to any disability, liability, restriction or condition with regard to access to shops, public restaurants, hotels and places of public entertainment, or the use of wells, tanks, bathing ghats, roads and places of public resort maintained wholly or partly out of State funds or dedicated to the use of the general public."),
    ("f-18", F, "There shall be equality of opportunity for all citizens in matters relating to employment or appointment to any office under the State."),
    ("f-19", F, "Nothing in this article shall prevent the State from making any special provision for women and children."),
    ("f-20", F, "Untouchability is abolished and its practice in any form is forbidden. The enforcement of any disability arising out of Untouchability shall be an offence punishable in accordance with law."),
    ("f-21", F, "It shall be an unlawful employment practice for an employer to fail or refuse to hire or to discharge any individual, or otherwise to discriminate against any individual with respect to his compensation, terms, conditions, or privileges of employment, because of such individual's race, color, religion, sex, or national origin."),
    ("f-22", F, "It shall be an unlawful employment practice for an employer to limit, segregate, or classify his employees or applicants for employment in any way which would deprive or tend to deprive any individual of employment opportunities or otherwise adversely affect his status as an employee, because of such individual's race, color, religion, sex, or national origin."),
    ("f-23", F, "If the court finds that the respondent has intentionally engaged in or is intentionally engaging in an unlawful employment practice charged in the complaint, the court may enjoin the respondent from engaging in such unlawful employment practice, and order such affirmative action as may be appropriate, which may include, but is not limited to, reinstatement or hiring of employees, with or without back pay, or any other equitable relief as the court deems appropriate."),
    ("f-24", F, "Whenever the Attorney General has reasonable cause to believe that any person or group of persons is engaged in a pattern or practice of resistance to the full enjoyment of any of the rights secured by this title, the Attorney General may bring a civil action in the appropriate district court of the United States by filing with it a complaint setting forth facts pertaining to such pattern or practice."),
    ("f-25", F, "The Congress finds that there is a need to insure that the various financial institutions and other firms engaged in the extensions of credit exercise their responsibility to make credit available with fairness, impartiality, and without discrimination on the basis of sex or marital status."),
    ("f-26", F, "Economic stabilization would be enhanced and competition among the various financial institutions and other firms engaged in the extension of credit would be strengthened by an absence of discrimination on the basis of sex or marital status, as well as by the informed use of credit which Congress has heretofore sought to promote."),
    ("f-27", F, "It is the purpose of this Act to require that financial institutions and other firms engaged in the extension of credit make that credit equally available to all creditworthy customers without regard to sex or marital status."),
    ("f-28", F, "WE, THE PEOPLE OF INDIA, having solemnly resolved to constitute India into a SOVEREIGN SOCIALIST SECULAR DEMOCRATIC REPUBLIC and to secure to all its citizens: JUSTICE, social, economic and political; LIBERTY of thought, expression, belief, faith and worship; EQUALITY of status and of opportunity; and to promote among them all FRATERNITY assuring the dignity of the individual and the unity and integrity of the Nation; IN OUR CONSTITUENT ASSEMBLY this twenty-sixth day of November, 1949, do HEREBY ADOPT, ENACT AND GIVE TO OURSELVES THIS CONSTITUTION."),
    ("f-29", F, "It shall not constitute discrimination for purposes of this subchapter for a creditor to use any empirically derived credit system which considers age if such system is demonstrably and statistically sound in accordance with regulations of the Bureau, except that in the operation of such system the age of an elderly applicant may not be used to the detriment of such applicant."),
    ("f-30", F, "It shall not constitute discrimination for purposes of this subchapter for a creditor to make an inquiry or to consider the age of an elderly applicant when the age of such applicant is used by the creditor in the extension of credit in favor of such applicant."),
    ("f-31", F, "It shall be an unlawful employment practice for an employment agency to discriminate against any individual because he has made a charge, testified, assisted, or participated in any manner in an investigation, proceeding, or hearing under this title."),
    ("f-32", F, "All persons shall be entitled to be free, at any establishment or place, from discrimination or segregation of any kind on the ground of race, color, religion, or national origin, if such discrimination or segregation is or purports to be required by any law, statute, ordinance, regulation, rule, or order of a State or any agency or political subdivision thereof."),
    ("f-33", F, "A demonstration that an employment practice is required by business necessity may not be used as a defense against a claim of intentional discrimination under this title."),
    ("f-34", F, "Notwithstanding any other provision of this title, a rule barring the employment of an individual who currently and knowingly uses or possesses a controlled substance, other than the use or possession of a drug taken under the supervision of a licensed health care professional, shall be considered an unlawful employment practice under this title only if such rule is adopted or applied with an intent to discriminate because of race, color, religion, sex, or national origin."),
    ("f-35", F, "No person shall withhold, deny, or attempt to withhold or deny, or deprive or attempt to deprive, any person of any right or privilege secured by section 201 or 202, or intimidate, threaten, or coerce any person with the purpose of interfering with any right or privilege secured by section 201 or 202."),
    ("f-36", F, "It shall be unlawful for any creditor to discriminate against any applicant, with respect to any aspect of a credit transaction, because the applicant has in good faith exercised any right under the Consumer Credit Protection Act."),
    # ------------------------------------------------------------------
    # Non-policy statutory machinery (definitions, administration)
    # ------------------------------------------------------------------
    ("n-01", N, "The term person includes one or more individuals, governments, governmental agencies, political subdivisions, labor unions, partnerships, associations, corporations, legal representatives, mutual companies, joint-stock companies, trusts, unincorporated organizations, trustees, trustees in cases under title 11, or receivers."),
    ("n-02", N, "The term employer means a person engaged in an industry affecting commerce who has fifteen or more employees for each working day in each of twenty or more calendar weeks in the current or preceding calendar year, and any agent of such a person."),
    ("n-03", N, "The term employment agency means any person regularly undertaking with or without compensation to procure employees for an employer or to procure for employees opportunities to work for an employer and includes an agent of such a person."),
    ("n-04", N, "The term labor organization means a labor organization engaged in an industry affecting commerce, and any agent of such an organization, and includes any organization of any kind, any agency, or employee representation committee, group, association, or plan so engaged in which employees participate and which exists for the purpose, in whole or in part, of dealing with employers concerning grievances, labor disputes, wages, rates of pay, hours, or other terms or conditions of employment."),
    ("n-05", N, "The term commerce means trade, traffic, commerce, transportation, transmission, or communication among the several States, or between a State and any place outside thereof, or within the District of Columbia, or a possession of the United States, or between points in the same State but through a point outside thereof."),
    ("n-06", N, "The term State includes a State of the United States, the District of Columbia, Puerto Rico, the Virgin Islands, American Samoa, Guam, Wake Island, the Canal Zone, and Outer Continental Shelf lands defined in the Outer Continental Shelf Lands Act."),
    ("n-07", N, "There is hereby created a Commission to be known as the Equal Employment Opportunity Commission, which shall be composed of five members, not more than three of whom shall be members of the same political party."),
    ("n-08", N, "Members of the Commission shall be appointed by the President by and with the advice and consent of the Senate for a term of five years."),
    ("n-09", N, "The President shall designate one member to serve as Chairman of the Commission, and one member to serve as Vice Chairman."),
    ("n-10", N, "The Commission shall, at the close of each fiscal year, report to the Congress and to the President concerning the action it has taken and the names, salaries, and duties of all individuals in its employ."),
    ("n-11", N, "The principal office of the Commission shall be in or near the District of Columbia, but it may meet or exercise any or all its powers at any other place."),
    ("n-12", N, "The Commission shall have power to cooperate with and, with their consent, utilize regional, State, local, and other agencies, both public and private, and individuals."),
    ("n-13", N, "Each United States district court and each United States court of a place subject to the jurisdiction of the United States shall have jurisdiction of actions brought under this title."),
    ("n-14", N, "Charges shall be in writing under oath or affirmation and shall contain such information and be in such form as the Commission requires."),
    ("n-15", N, "Each year, each agency referred to in section 1691c of this title shall make a report to the Bureau concerning the administration of its functions under this subchapter, including such recommendations as the agency deems necessary or appropriate."),
    ("n-16", N, "The Bureau shall prescribe regulations to carry out the purposes of this subchapter, and such regulations may contain but are not limited to such classifications, differentiation, or other provision, as in the judgment of the Bureau are necessary or proper to effectuate the purposes of this subchapter, to prevent circumvention or evasion thereof, or to facilitate or substantiate compliance therewith."),
    ("n-17", N, "Any creditor who fails to comply with any requirement imposed under this subchapter shall be liable to the aggrieved applicant for any actual damages sustained by such applicant acting either in an individual capacity or as a member of a class."),
    ("n-18", N, "Each creditor shall furnish to an applicant a copy of any and all written appraisals and valuations developed in connection with the applicant's application for a loan that is secured or would have been secured by a first lien on a dwelling."),
    ("n-19", N, "Every employer, employment agency, and labor organization subject to this title shall make and keep such records relevant to the determinations of whether unlawful employment practices have been or are being committed, preserve such records for such periods, and make such reports therefrom as the Commission shall prescribe by regulation or order."),
    ("n-20", N, "There shall be a General Counsel of the Commission appointed by the President, by and with the advice and consent of the Senate, for a term of four years."),
    ("n-21", N, "A vacancy in the Commission shall not impair the right of the remaining members to exercise all the powers of the Commission and three members thereof shall constitute a quorum."),
]

# The only inflections of the discriminat- stem the bundled resources handle.
ALLOWED_STEM_FORMS = {"discriminate", "discrimination", "discriminatory"}

# Words whose taxonomy or vector relatedness to the seeds reaches the
# useful thresholds; they must never occur in a non_fair sentence.
STRONG_WORDS = {
    "discriminate", "discrimination", "discriminatory", "discriminating",
    "fairness", "fairly", "fair", "justice", "justness", "bias", "biased",
    "prejudice", "equality", "impartiality", "equity", "equitable",
    "segregate", "segregation", "preference", "preferential", "treatment",
    "mistreatment", "mistreat", "injustice", "activity", "civil",
    "favoritism", "racism", "sexism", "quality",
}


def main() -> int:
    ids = [sid for sid, _, _ in SENTENCES]
    assert len(ids) == len(set(ids)), "duplicate sentence ids"
    assert ids[:5] == [f"seed-{i}" for i in range(1, 6)]

    stem = re.compile(r"discriminat[a-z]*", re.IGNORECASE)
    for sid, label, text in SENTENCES:
        for form in stem.findall(text):
            assert form.lower() in ALLOWED_STEM_FORMS, (sid, form)
        if label is N:
            hits = set(word_lemmas(text)) & STRONG_WORDS
            assert not hits, f"{sid} contains seed-related words {sorted(hits)}"

    ds = Dataset(sentences=tuple(
        LabeledSentence(id=sid, text=text, label=label)
        for sid, label, text in SENTENCES
    ))
    n_fair, n_non, n_unlabeled = ds.counts
    assert n_unlabeled == 0
    save_labeled(ds, OUT)
    print(f"wrote {len(ds.sentences)} sentences ({n_fair} fair, {n_non} non_fair) to {OUT}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
